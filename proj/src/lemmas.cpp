#include "smallgraph/lemmas.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace smallgraph {

namespace {

std::string join_positions(const std::vector<int>& ps) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out << ",";
        out << ps[i];
    }
    out << "}";
    return out.str();
}

// Rotation/direction relabelings of a cycle's canonical vertex order.
std::vector<int> relabel(const std::vector<int>& vs, int rot, bool rev) {
    int k = static_cast<int>(vs.size());
    std::vector<int> x(k);
    for (int i = 0; i < k; ++i)
        x[i] = vs[rev ? ((rot - i) % k + k) % k : (rot + i) % k];
    return x;
}

}  // namespace

LemmaVerdict check_hamiltonian_chord_pattern(const Graph& g, const Cycle& c,
                                             ChordPatternWitness* out) {
    if (g.vertex_count() != 14)
        throw std::invalid_argument("chord pattern check needs a 14-vertex graph");
    if (c.length() != 14 || !is_cycle_of(g, c))
        throw std::invalid_argument("not a Hamiltonian cycle of the graph");

    LemmaVerdict verdict{"hamiltonian-chord-pattern", to_string(c), false, ""};

    // Empty string on success, otherwise the first violated condition.
    auto evaluate = [&](const std::vector<int>& x, int* plus_parity) -> std::string {
        std::map<int, int> pos_of;
        for (int i = 0; i < 14; ++i) pos_of[x[i]] = i;
        std::vector<int> offset(14, 0);
        for (int i = 0; i < 14; ++i) {
            std::vector<int> chords;
            for (int nb : g.neighbor_labels(x[i])) {
                int j = pos_of.at(nb);
                if (j == (i + 1) % 14 || j == (i + 13) % 14) continue;
                chords.push_back(j);
            }
            if (chords.size() != 1)
                return "x" + std::to_string(i + 1) + "=" + std::to_string(x[i]) + " has " +
                       std::to_string(chords.size()) + " chords, expected 1";
            int off = ((chords[0] - i) % 14 + 14) % 14;
            if (off != 5 && off != 9)
                return "chord x" + std::to_string(i + 1) + "-x" + std::to_string(chords[0] + 1) + " (" +
                       std::to_string(x[i]) + "-" + std::to_string(x[chords[0]]) + ") at offset +" +
                       std::to_string(off) + ", expected +5 or -5";
            offset[i] = off;
        }
        int plus = -1, minus = -1;
        for (int i = 0; i < 14; ++i) {
            int parity = (i + 1) % 2;
            int& cls = offset[i] == 5 ? plus : minus;
            if (cls == -1) cls = parity;
            else if (cls != parity)
                return std::string(offset[i] == 5 ? "+5" : "-5") +
                       " chords occur at both parities (seen at x" + std::to_string(i + 1) + ")";
        }
        if (plus == minus)
            return "+5 and -5 chords share a parity class";
        if (plus_parity) *plus_parity = plus;
        return "";
    };

    for (int rev = 0; rev < 2; ++rev)
        for (int rot = 0; rot < 14; ++rot) {
            std::vector<int> x = relabel(c.vertices(), rot, rev != 0);
            int plus = 0;
            std::string violation = evaluate(x, &plus);
            if (violation.empty()) {
                verdict.pass = true;
                std::ostringstream ws;
                ws << "labeling " << join_positions(x) << "; +5 chords at "
                   << (plus == 1 ? "odd" : "even") << " positions";
                verdict.witness = ws.str();
                if (out) {
                    out->labeling = x;
                    out->plus_parity = plus;
                }
                return verdict;
            }
            if (rev == 0 && rot == 0) verdict.witness = violation;
        }
    return verdict;
}

LemmaVerdict check_twelve_cycle_complement(const Graph& g, const Cycle& c,
                                           ComplementWitness* out) {
    if (g.vertex_count() != 14)
        throw std::invalid_argument("complement check needs a 14-vertex graph");
    if (!is_cycle_of(g, c))
        throw std::invalid_argument("not a cycle of the graph");
    std::vector<int> off;
    std::map<int, int> pos_of;
    for (int i = 0; i < c.length(); ++i) pos_of[c.vertices()[i]] = i;
    for (int l : g.labels())
        if (!pos_of.count(l)) off.push_back(l);
    if (c.length() != 12 || off.size() != 2)
        throw std::invalid_argument("cycle does not omit exactly 2 vertices");

    LemmaVerdict verdict{"12cycle-complement", to_string(c), false, ""};
    int v = off[0], w = off[1];
    if (g.adjacent_labels(v, w)) {
        verdict.witness = "edge between off-cycle vertices " + std::to_string(v) + " and " +
                          std::to_string(w);
        return verdict;
    }

    // 0-based positions of u's neighbors along the given labeling.
    auto positions_on = [&](int u, const std::map<int, int>& pos) {
        std::vector<int> ps;
        for (int nb : g.neighbor_labels(u)) {
            auto it = pos.find(nb);
            if (it != pos.end()) ps.push_back(it->second);
        }
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    auto spaced_four = [](const std::vector<int>& ps) {
        return ps.size() == 3 && ps[1] - ps[0] == 4 && ps[2] - ps[1] == 4;
    };

    auto pos_v = positions_on(v, pos_of);
    auto pos_w = positions_on(w, pos_of);
    for (auto [u, ps] : {std::pair{v, pos_v}, std::pair{w, pos_w}}) {
        if (!spaced_four(ps)) {
            std::vector<int> one_based;
            for (int p : ps) one_based.push_back(p + 1);
            verdict.witness = "off-cycle vertex " + std::to_string(u) + " sees the cycle at positions " +
                              join_positions(one_based) + ", expected 3 positions spaced 4 apart";
            return verdict;
        }
    }
    for (int p : pos_v) {
        bool ok = std::binary_search(pos_w.begin(), pos_w.end(), (p + 1) % 12) ||
                  std::binary_search(pos_w.begin(), pos_w.end(), (p + 11) % 12);
        if (!ok) {
            verdict.witness = "neighbor x" + std::to_string(p + 1) + " of " + std::to_string(v) +
                              " is not cycle-adjacent to any neighbor of " + std::to_string(w);
            return verdict;
        }
    }

    // Normalize so v ~ {x1,x5,x9} and w ~ {x4,x8,x12}; always reachable once
    // the spacing and interleaving conditions hold.
    for (int swap_vw = 0; swap_vw < 2; ++swap_vw)
        for (int rev = 0; rev < 2; ++rev)
            for (int rot = 0; rot < 12; ++rot) {
                int a = swap_vw ? w : v, b = swap_vw ? v : w;
                std::vector<int> x = relabel(c.vertices(), rot, rev != 0);
                std::map<int, int> pos;
                for (int i = 0; i < 12; ++i) pos[x[i]] = i;
                if (positions_on(a, pos) != std::vector<int>{0, 4, 8}) continue;
                if (positions_on(b, pos) != std::vector<int>{3, 7, 11}) continue;

                std::vector<std::pair<int, int>> chords;
                for (auto [u1, u2] : g.edges()) {
                    if (u1 == a || u1 == b || u2 == a || u2 == b) continue;
                    int i = pos.at(u1), j = pos.at(u2);
                    int d = ((j - i) % 12 + 12) % 12;
                    if (d == 1 || d == 11) continue;  // cycle edge
                    chords.emplace_back(std::min(i, j) + 1, std::max(i, j) + 1);
                }
                std::sort(chords.begin(), chords.end());

                verdict.pass = true;
                std::ostringstream ws;
                ws << "v=" << a << " ~ {x1,x5,x9}, w=" << b << " ~ {x4,x8,x12}; chords";
                for (auto [i, j] : chords) ws << " x" << i << "-x" << j;
                verdict.witness = ws.str();
                if (out) {
                    out->v = a;
                    out->w = b;
                    auto pa = positions_on(a, pos_of), pb = positions_on(b, pos_of);
                    for (int i = 0; i < 3; ++i) {
                        out->v_positions[i] = pa[i] + 1;
                        out->w_positions[i] = pb[i] + 1;
                    }
                    out->labeling = x;
                    out->chords = chords;
                }
                return verdict;
            }
    verdict.witness = "no labeling normalizes to v ~ {x1,x5,x9}, w ~ {x4,x8,x12}";
    return verdict;
}

std::vector<Cycle> twelve_cycles_avoiding_pair(const Graph& g, int u_label, int v_label) {
    if (u_label == v_label)
        throw std::invalid_argument("need two distinct vertices");
    Graph h = delete_vertices(g, {u_label, v_label});
    if (h.vertex_count() < 12) return {};
    return enumerate_cycles(h, 12);
}

LemmaVerdict check_disjoint_pair_configuration(const Graph& g, const DisjointPair& p,
                                               PairConfigWitness* out) {
    if (g.vertex_count() != 14)
        throw std::invalid_argument("pair configuration check needs a 14-vertex graph");
    if (!is_cycle_of(g, p.first) || !is_cycle_of(g, p.second))
        throw std::invalid_argument("pair cycles are not cycles of the graph");

    LemmaVerdict verdict{"disjoint-pair-configuration", to_string(p), false, ""};
    std::vector<int> off;
    for (int l : g.labels()) {
        bool on = false;
        for (int m : p.first.vertices()) on = on || m == l;
        for (int m : p.second.vertices()) on = on || m == l;
        if (!on) off.push_back(l);
    }
    int a = off[0], b = off[1];
    if (!g.adjacent_labels(a, b)) {
        verdict.witness = "off-pair vertices " + std::to_string(a) + " and " + std::to_string(b) +
                          " are not adjacent";
        return verdict;
    }

    auto nbrs = [&](int u) { return g.neighbor_labels(u); };  // sorted
    auto expect = [](std::vector<int> want) {
        std::sort(want.begin(), want.end());
        return want;
    };

    for (int swap_vw = 0; swap_vw < 2; ++swap_vw)
        for (int swap_cy = 0; swap_cy < 2; ++swap_cy)
            for (int reva = 0; reva < 2; ++reva)
                for (int rota = 0; rota < 6; ++rota)
                    for (int revb = 0; revb < 2; ++revb)
                        for (int rotb = 0; rotb < 6; ++rotb) {
                            int v = swap_vw ? b : a, w = swap_vw ? a : b;
                            const Cycle& ca = swap_cy ? p.second : p.first;
                            const Cycle& cb = swap_cy ? p.first : p.second;
                            std::vector<int> x = relabel(ca.vertices(), rota, reva != 0);
                            std::vector<int> y = relabel(cb.vertices(), rotb, revb != 0);
                            auto ring = [](const std::vector<int>& z, int i, int third) {
                                return std::vector<int>{z[(i + 1) % 6], z[(i + 5) % 6], third};
                            };
                            bool ok = nbrs(v) == expect({w, x[0], y[3]}) &&
                                      nbrs(w) == expect({v, y[0], x[3]});
                            static const int xmate[6] = {-1, 1, 4, -1, 2, 5};  // x_{i+1} ~ y_{xmate[i]+1}
                            for (int i = 0; ok && i < 6; ++i) {
                                auto want_x = i == 0   ? ring(x, 0, v)
                                              : i == 3 ? ring(x, 3, w)
                                                       : ring(x, i, y[xmate[i]]);
                                auto want_y = i == 0   ? ring(y, 0, w)
                                              : i == 3 ? ring(y, 3, v)
                                                       : ring(y, i, x[xmate[i]]);
                                ok = nbrs(x[i]) == expect(want_x) && nbrs(y[i]) == expect(want_y);
                            }
                            if (!ok) continue;
                            verdict.pass = true;
                            std::ostringstream ws;
                            ws << "v=" << v << " ~ x1,y4; w=" << w << " ~ y1,x4; x=(";
                            for (int i = 0; i < 6; ++i) ws << (i ? " " : "") << x[i];
                            ws << ") y=(";
                            for (int i = 0; i < 6; ++i) ws << (i ? " " : "") << y[i];
                            ws << ")";
                            verdict.witness = ws.str();
                            if (out) {
                                out->v = v;
                                out->w = w;
                                std::copy(x.begin(), x.end(), out->x.begin());
                                std::copy(y.begin(), y.end(), out->y.begin());
                            }
                            return verdict;
                        }
    verdict.witness = "no rotation/reflection labeling matches the configuration template";
    return verdict;
}

}  // namespace smallgraph

#include "spckit/models.hpp"

#include <algorithm>

#include "spckit/errors.hpp"

namespace spckit {

LatticeRepresentation representation_of(const SpcLattice& sl) {
    if (sl.spcs.empty()) throw ArgumentOutOfRange("lattice carries no SPCs");
    const int n = sl.spcs.front().ground_size();
    const FiniteGroup& g = sl.spcs.front().group();
    std::vector<Spc> gens = join_irreducibles_rhodes(n, g);
    std::vector<int> phi;
    std::vector<std::string> labels;
    for (const Spc& s : gens) {
        auto it = std::find(sl.spcs.begin(), sl.spcs.end(), s);
        if (it == sl.spcs.end()) throw ArgumentOutOfRange("generator missing from the lattice");
        phi.push_back(static_cast<int>(it - sl.spcs.begin()));
        labels.push_back(s.to_text());
    }
    return make_representation(sl.lattice, std::move(phi), std::move(labels));
}

SimplicialComplex rhodes_complex(int n, const FiniteGroup& g) {
    SpcLattice hat = build_rhodes_hat(n, g);
    return complex_from_lattice(representation_of(hat), hat.sentinel_top);
}

SimplicialComplex rhodes_hat_complex(int n, const FiniteGroup& g) {
    SpcLattice hat = build_rhodes_hat(n, g);
    return complex_from_lattice(representation_of(hat));
}

SimplicialComplex dowling_complex(int n, const FiniteGroup& g) {
    SpcLattice q = build_dowling(n, g);
    std::vector<Spc> gens = atoms_dowling(n, g);
    std::vector<int> phi;
    std::vector<std::string> labels;
    for (const Spc& s : gens) {
        auto it = std::find(q.spcs.begin(), q.spcs.end(), s);
        if (it == q.spcs.end()) throw ArgumentOutOfRange("atom missing from the lattice");
        phi.push_back(static_cast<int>(it - q.spcs.begin()));
        labels.push_back(s.to_text());
    }
    return complex_from_lattice(make_representation(q.lattice, std::move(phi), std::move(labels)));
}

LatticeRepresentation ln_representation(int n, const FiniteGroup& g) {
    LnLattice ln = build_Ln(n);
    auto element_at = [&](Mask subset, int level) {
        for (size_t i = 0; i < ln.coords.size(); ++i)
            if (ln.coords[i] == std::make_pair(subset, level)) return static_cast<int>(i);
        throw ArgumentOutOfRange("coordinate missing from L_n");
    };
    std::vector<int> phi;
    std::vector<std::string> labels;
    for (const Spc& s : join_irreducibles_rhodes(n, g)) {
        Mask d = s.domain();
        if (popcount(d) == 1) {
            int i = min_point(d);
            phi.push_back(element_at(0, i == n ? n : i));
        } else {
            phi.push_back(element_at(d & ~point_bit(n), n));
        }
        labels.push_back(s.to_text());
    }
    return make_representation(ln.lattice, std::move(phi), std::move(labels));
}

LatticeRepresentation powerset_representation(int n) {
    FiniteLattice p = powerset_lattice(n);  // element index == subset mask
    std::vector<int> phi;
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mask image = 0;
            if (i != 0) image |= point_bit(i);
            image |= point_bit(j);
            phi.push_back(static_cast<int>(image));
            labels.push_back(std::to_string(i) + "-" + std::to_string(j));
        }
    return make_representation(std::move(p), std::move(phi), std::move(labels));
}

Multigraph complete_graph(int m) {
    Multigraph g{m, {}};
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) g.edges.push_back({i, j});
    return g;
}

Multigraph parallel_complete_graph(int m, int copies) {
    if (copies < 1) throw ArgumentOutOfRange("at least one copy of each edge");
    Multigraph g{m, {}};
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int c = 0; c < copies; ++c) g.edges.push_back({i, j});
    return g;
}

}  // namespace spckit

#include "ripsnet/homology.hpp"

#include <stdexcept>

namespace ripsnet {

void Chain::add(int index, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeff.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

Chain Chain::operator-(const Chain& other) const {
    Chain out = *this;
    for (const auto& [i, c] : other.coeff) out.add(i, -c);
    return out;
}

Chain Chain::operator+(const Chain& other) const {
    Chain out = *this;
    for (const auto& [i, c] : other.coeff) out.add(i, c);
    return out;
}

Chain cycle_chain(const RipsComplex& x, const std::vector<NodeId>& cycle) {
    Chain c;
    c.degree = 1;
    const std::size_t n = cycle.size();
    if (n < 3) throw std::invalid_argument("cycle needs at least three nodes");
    for (std::size_t i = 0; i < n; ++i) {
        const NodeId u = cycle[i];
        const NodeId v = cycle[(i + 1) % n];
        const int e = x.edge_index(u, v);
        if (e < 0) throw std::invalid_argument("cycle hop is not an edge");
        c.add(e, u < v ? 1 : -1);
    }
    return c;
}

Chain triangle_boundary(const RipsComplex& x, int triangle_index) {
    const auto& [a, b, c] = x.triangles.at(triangle_index);
    Chain out;
    out.degree = 1;
    out.add(x.edge_index(b, c), 1);
    out.add(x.edge_index(a, c), -1);
    out.add(x.edge_index(a, b), 1);
    return out;
}

namespace {

QColumn chain_to_column(const Chain& c) {
    QColumn col;
    col.reserve(c.coeff.size());
    for (const auto& [i, v] : c.coeff) col.emplace_back(i, v);
    return col;
}

}  // namespace

ExactHomology::ExactHomology(const RipsComplex& x) : x_(x) {
    d1_ = boundary_matrix(1, x);
    const spmat_i d2 = boundary_matrix(2, x);
    for (int j = 0; j < d2.outerSize(); ++j) {
        QColumn col;
        for (spmat_i::InnerIterator it(d2, j); it; ++it)
            if (it.value() != 0) col.emplace_back(it.row(), it.value());
        d2_reduced_.add_column(std::move(col));
    }
    betti_.rank_d1 = exact_rank(d1_);
    betti_.rank_d2 = d2_reduced_.rank();
    betti_.dim_ker_d1 = static_cast<int>(x.n_edges()) - betti_.rank_d1;
    betti_.b0 = static_cast<int>(x.n_vertices()) - betti_.rank_d1;
    betti_.b1 = betti_.dim_ker_d1 - betti_.rank_d2;
}

bool ExactHomology::is_cycle(const Chain& c) const {
    if (c.degree != 1) return false;
    std::map<int, Rational> image;
    for (const auto& [e, v] : c.coeff) {
        for (spmat_i::InnerIterator it(d1_, e); it; ++it) {
            const Rational term = v * it.value();
            auto [jt, inserted] = image.try_emplace(it.row(), term);
            if (!inserted) {
                jt->second += term;
                if (jt->second == 0) image.erase(jt);
            }
        }
    }
    return image.empty();
}

bool ExactHomology::is_boundary(const Chain& c) const {
    if (!is_cycle(c))
        throw std::invalid_argument("chain is not a cycle");
    return d2_reduced_.in_span(chain_to_column(c));
}

bool ExactHomology::homologous(const Chain& c1, const Chain& c2) const {
    if (!is_cycle(c1) || !is_cycle(c2))
        throw std::invalid_argument("chain is not a cycle");
    return d2_reduced_.in_span(chain_to_column(c1 - c2));
}

BettiNumbers betti_exact(const RipsComplex& x) {
    return ExactHomology(x).betti();
}

bool homologous_check(const Chain& c1, const Chain& c2, const RipsComplex& x) {
    return ExactHomology(x).homologous(c1, c2);
}

}  // namespace ripsnet

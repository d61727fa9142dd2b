#include "ripsnet/exact.hpp"

namespace ripsnet {

QColumn column_axpy(const QColumn& a, const Rational& s, const QColumn& b) {
    QColumn out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

QColumn ColumnReducer::reduce(QColumn col) const {
    while (!col.empty()) {
        const int low = col.back().first;
        const auto it = pivot_.find(low);
        if (it == pivot_.end()) break;
        const QColumn& p = columns_[it->second];
        const Rational s = -col.back().second / p.back().second;
        col = column_axpy(col, s, p);
    }
    return col;
}

bool ColumnReducer::add_column(QColumn col) {
    col = reduce(std::move(col));
    if (col.empty()) return false;
    pivot_[col.back().first] = static_cast<int>(columns_.size());
    columns_.push_back(std::move(col));
    return true;
}

bool ColumnReducer::in_span(QColumn col) const {
    return reduce(std::move(col)).empty();
}

int exact_rank(const spmat_i& m) {
    ColumnReducer red;
    for (int j = 0; j < m.outerSize(); ++j) {
        QColumn col;
        for (spmat_i::InnerIterator it(m, j); it; ++it)
            if (it.value() != 0) col.emplace_back(it.row(), it.value());
        red.add_column(std::move(col));
    }
    return red.rank();
}

}  // namespace ripsnet

#include "cidim/gf.hpp"

namespace cidim {

PrimeField::PrimeField(Scalar p) : p_(p) {
    if (p < 2 || p >= (1ull << 31))
        throw std::invalid_argument("characteristic must be a prime below 2^31");
    for (Scalar d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
}

Scalar PrimeField::pow(Scalar a, Scalar e) const {
    Scalar r = 1 % p_, b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Scalar PrimeField::inv(Scalar a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::times(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("Mat::times: shape mismatch");
    Mat out(rows_, rhs.cols_, fld_);
    Scalar p = fld_.characteristic();
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Scalar s = at(i, k);
            if (!s) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = (out.at(i, j) + s * rhs.at(k, j)) % p;
        }
    return out;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::logic_error("Mat::apply: size mismatch");
    Vec out(rows_, 0);
    Scalar p = fld_.characteristic();
    for (int i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (int j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[j]) % p;
        out[i] = acc;
    }
    return out;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
        Scalar iv = fld_.inv(at(r, c));
        for (int j = c; j < cols_; ++j) at(r, j) = fld_.mul(at(r, j), iv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Scalar f = at(i, c);
            if (!f) continue;
            for (int j = c; j < cols_; ++j)
                at(i, j) = fld_.sub(at(i, j), fld_.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

std::vector<Vec> Mat::kernel() const {
    Mat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols_, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fld_.neg(tmp.at(static_cast<int>(r), fc));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::logic_error("Mat::solve: size mismatch");
    Mat aug(rows_, cols_ + 1, fld_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

Vec EchelonSpace::residual(const Vec& v) const {
    Vec w = v;
    for (const auto& [piv, row] : rows_) {
        Scalar f = w[piv];
        if (!f) continue;
        for (int i = 0; i < n_; ++i) w[i] = fld_.sub(w[i], fld_.mul(f, row[i]));
    }
    return w;
}

bool EchelonSpace::contains(const Vec& v) const {
    Vec w = residual(v);
    for (Scalar s : w)
        if (s) return false;
    return true;
}

bool EchelonSpace::insert(const Vec& v) {
    if (static_cast<int>(v.size()) != n_) throw std::logic_error("EchelonSpace: dim mismatch");
    Vec w = residual(v);
    int piv = -1;
    for (int i = 0; i < n_; ++i)
        if (w[i]) { piv = i; break; }
    if (piv < 0) return false;
    Scalar iv = fld_.inv(w[piv]);
    for (int i = 0; i < n_; ++i) w[i] = fld_.mul(w[i], iv);
    // Back-eliminate the new pivot from stored rows to stay reduced.
    for (auto& [q, row] : rows_) {
        Scalar f = row[piv];
        if (!f) continue;
        for (int i = 0; i < n_; ++i) row[i] = fld_.sub(row[i], fld_.mul(f, w[i]));
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < piv) ++it;
    rows_.insert(it, {piv, std::move(w)});
    return true;
}

void EchelonSpace::insert_cols(const Mat& m) {
    for (int j = 0; j < m.cols(); ++j) insert(m.col(j));
}

std::vector<int> EchelonSpace::pivots() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [piv, row] : rows_) out.push_back(piv);
    return out;
}

}  // namespace cidim

#include "dexsym/linalg.hpp"

#include <algorithm>

namespace dexsym {

namespace {

void check_same_dim(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size()) {
        throw error(std::string(op) + ": dimension mismatch (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

Vec zero_vec(const FieldSpec& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "vec_add");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "vec_sub");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    return Subspace(f, ambient);
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_.push_back(unit_vec(f, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) {
        throw error("Subspace::reduce: ambient mismatch (" + std::to_string(v.size()) + " vs " +
                    std::to_string(ambient_) + ")");
    }
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = r[pivots_[k]];
        if (!c.is_zero()) r = vec_sub(r, vec_scale(c, rows_[k]));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

Vec Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) throw error("Subspace::coordinates: vector outside subspace");
    Vec coords;
    coords.reserve(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) coords.push_back(v[pivots_[k]]);
    return coords;
}

void Subspace::insert_reduced(Vec v) {
    // v is already fully reduced against rows_ and nonzero
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    v = vec_scale(v[p].inverse(), v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][p];
        if (!c.is_zero()) rows_[k] = vec_sub(rows_[k], vec_scale(c, v));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
}

Subspace rref(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& rows) {
    Subspace s(f, ambient);
    for (const Vec& row : rows) {
        if (row.size() != ambient) {
            throw error("rref: row of length " + std::to_string(row.size()) +
                        " in ambient dimension " + std::to_string(ambient));
        }
        for (const Scalar& x : row) {
            if (!(x.field() == f)) throw error("rref: entry field mismatch");
        }
        Vec r = s.reduce(row);
        if (!vec_is_zero(r)) s.insert_reduced(std::move(r));
    }
    return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& rows) {
    return rref(f, ambient, rows);
}

std::string Subspace::str() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ", ";
        s += vec_str(rows_[i]);
    }
    return s + "}";
}

namespace {

void check_compatible(const Subspace& u, const Subspace& v, const char* op) {
    if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field())) {
        throw error(std::string(op) + ": ambient mismatch");
    }
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    check_compatible(u, v, "subspace_sum");
    std::vector<Vec> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return rref(u.field(), u.ambient_dim(), rows);
}

bool subspace_contains(const Subspace& u, const Vec& v) {
    return u.contains(v);
}

bool subspace_eq(const Subspace& u, const Subspace& v) {
    check_compatible(u, v, "subspace_eq");
    return u == v;
}

bool subspace_leq(const Subspace& u, const Subspace& v) {
    check_compatible(u, v, "subspace_leq");
    for (const Vec& row : u.basis()) {
        if (!v.contains(row)) return false;
    }
    return true;
}

}  // namespace dexsym

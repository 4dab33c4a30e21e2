#include "dexsym/series.hpp"

namespace dexsym {

std::string series_kind_str(SeriesKind k) {
    switch (k) {
        case SeriesKind::RightLower: return "right_lower";
        case SeriesKind::LeftLower: return "left_lower";
        case SeriesKind::Derived: return "derived";
        default: return "full";
    }
}

SeriesTrace::SeriesTrace(SeriesKind kind, std::vector<Subspace> terms)
    : kind_(kind), terms_(std::move(terms)) {
    if (terms_.empty()) throw error("SeriesTrace: no terms");
}

const Subspace& SeriesTrace::term(std::size_t n) const {
    if (n == 0) throw error("SeriesTrace::term: series indices start at 1");
    return n <= terms_.size() ? terms_[n - 1] : terms_.back();
}

SeriesTrace series(const AlgebraTable& A, SeriesKind kind) {
    std::vector<Subspace> terms;
    terms.push_back(Subspace::full(A.field(), A.dim()));
    for (;;) {
        const Subspace& last = terms.back();
        Subspace next = Subspace::zero(A.field(), A.dim());
        switch (kind) {
            case SeriesKind::RightLower:
                next = subspace_product(A, last, terms.front());
                break;
            case SeriesKind::LeftLower:
                next = subspace_product(A, terms.front(), last);
                break;
            case SeriesKind::Derived:
                next = subspace_product(A, last, last);
                break;
            case SeriesKind::Full: {
                const std::size_t n = terms.size();
                for (std::size_t i = 1; i <= n; ++i) {
                    next = subspace_sum(
                        next, subspace_product(A, terms[i - 1], terms[n - i]));
                }
                break;
            }
        }
        if (next == last) break;
        terms.push_back(std::move(next));
        if (terms.size() > A.dim() + 2) {
            throw std::logic_error("series: chain failed to stabilize");
        }
    }
    return SeriesTrace(kind, std::move(terms));
}

namespace {

PredicateResult predicate_from(const SeriesTrace& t) {
    if (!t.terminal_is_zero()) return PredicateResult{false, std::nullopt};
    return PredicateResult{true, t.stabilized_at()};
}

void require_dextral_leibniz(const AlgebraTable& A, const char* op) {
    if (!is_right_leibniz(A).holds) {
        throw error(std::string(op) + ": precondition violated, not a right Leibniz algebra");
    }
    if (decide_dextral(A).status != DextralStatus::ProvedYes) {
        throw error(std::string(op) + ": precondition violated, not proved dextral symmetric");
    }
}

}  // namespace

PredicateResult is_solvable(const AlgebraTable& A) {
    return predicate_from(series(A, SeriesKind::Derived));
}

PredicateResult is_left_nilpotent(const AlgebraTable& A) {
    return predicate_from(series(A, SeriesKind::LeftLower));
}

PredicateResult is_right_nilpotent(const AlgebraTable& A) {
    return predicate_from(series(A, SeriesKind::RightLower));
}

PredicateResult is_nilpotent(const AlgebraTable& A) {
    return predicate_from(series(A, SeriesKind::Full));
}

bool verify_solnil2(const AlgebraTable& A, std::size_t m_max, std::size_t n_max) {
    require_dextral_leibniz(A, "verify_solnil2");
    SeriesTrace derived = series(A, SeriesKind::Derived);
    SeriesTrace left = series(A, SeriesKind::LeftLower);
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (std::size_t n = (m == 1 ? 1 : 2); n <= n_max; ++n) {
            Subspace lhs = subspace_product(A, derived.term(m), left.term(n));
            const Subspace& rhs = left.term((std::size_t{1} << (m - 1)) + n);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

bool verify_solnil3(const AlgebraTable& A, std::size_t m_max) {
    require_dextral_leibniz(A, "verify_solnil3");
    SeriesTrace derived = series(A, SeriesKind::Derived);
    SeriesTrace left = series(A, SeriesKind::LeftLower);
    for (std::size_t m = 1; m <= m_max; ++m) {
        if (!(derived.term(m) == left.term(std::size_t{1} << (m - 1)))) return false;
    }
    return true;
}

bool verify_leftnil_bound(const AlgebraTable& A) {
    require_dextral_leibniz(A, "verify_leftnil_bound");
    return series(A, SeriesKind::LeftLower).term(A.dim() + 1).dim() == 0;
}

}  // namespace dexsym

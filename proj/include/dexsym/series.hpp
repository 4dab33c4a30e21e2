#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dexsym/algebra.hpp"
#include "dexsym/dextral.hpp"

namespace dexsym {

/// The four descending chains of two-sided ideals:
///   RightLower: S(n+1) = [S(n), A]
///   LeftLower:  S(n+1) = [A, S(n)]
///   Derived:    S(n+1) = [S(n), S(n)]
///   Full:       S(n+1) = [S(1), S(n)] + [S(2), S(n-1)] + ... + [S(n), S(1)]
/// each starting from S(1) = A.
enum class SeriesKind { RightLower, LeftLower, Derived, Full };

std::string series_kind_str(SeriesKind k);

/// Terms from index 1 until two consecutive terms coincide. Descent is
/// guaranteed for any bilinear product, so the chain stabilizes within
/// dim + 1 steps.
class SeriesTrace {
  public:
    SeriesTrace(SeriesKind kind, std::vector<Subspace> terms);
    SeriesKind kind() const { return kind_; }
    const std::vector<Subspace>& terms() const { return terms_; }
    std::size_t stabilized_at() const { return terms_.size(); }
    bool terminal_is_zero() const { return terms_.back().dim() == 0; }
    /// 1-indexed term; indices past stabilization return the stable term.
    const Subspace& term(std::size_t n) const;

  private:
    SeriesKind kind_;
    std::vector<Subspace> terms_;
};

SeriesTrace series(const AlgebraTable& A, SeriesKind kind);

struct PredicateResult {
    bool holds = false;
    std::optional<std::size_t> index;  // smallest n with term(n) = 0, when holds
};

PredicateResult is_solvable(const AlgebraTable& A);
PredicateResult is_left_nilpotent(const AlgebraTable& A);
PredicateResult is_right_nilpotent(const AlgebraTable& A);
PredicateResult is_nilpotent(const AlgebraTable& A);

/// [S_derived(m), S_left(n)] == S_left(2^(m-1) + n) over 1 <= m <= m_max,
/// 1 <= n <= n_max, skipping the (m >= 2, n = 1) instances: those need the
/// second factor to be spanned by brackets and fail already for the
/// 3-dimensional algebra with [z,x] = z. Requires a dextral right Leibniz
/// algebra (precondition checked, error otherwise).
bool verify_solnil2(const AlgebraTable& A, std::size_t m_max, std::size_t n_max);

/// S_derived(m) == S_left(2^(m-1)) for 1 <= m <= m_max; same precondition.
bool verify_solnil3(const AlgebraTable& A, std::size_t m_max);

/// S_left(dim + 1) == 0; same precondition.
bool verify_leftnil_bound(const AlgebraTable& A);

}  // namespace dexsym

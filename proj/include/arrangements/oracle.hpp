// Brute-force point counts over finite fields, used as ground truth for the
// combinatorial formulas.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangements/algebra.hpp"
#include "arrangements/arrangement.hpp"
#include "arrangements/enumerative.hpp"

namespace arr {

/// q = p^alpha.
struct PrimePower {
  std::uint32_t p = 2;
  int alpha = 1;

  /// Throws std::invalid_argument unless q is a prime power below 2^31.
  static PrimePower parse(std::uint64_t q);
  std::uint64_t value() const;
};

enum class CountMode { union_points, complement_points };

const char* to_string(CountMode m) noexcept;

struct CountOptions {
  /// Largest admissible number of points to enumerate.
  std::uint64_t cap = 100'000'000;
  unsigned threads = 1;
};

/// Points of F_{q^s}^n (affine) or P^{n-1}(F_{q^s}) (projective).
BigInt ambient_count(Ambient ambient, int n, const BigInt& qs);

/// Exact count by testing every point against every form group. A
/// Z-arrangement is reduced mod p first. Throws std::length_error when the
/// enumeration would exceed the cap.
std::uint64_t count_points(const Arrangement& a, PrimePower q, int s, CountMode mode, const CountOptions& opts = {});

struct CountRow {
  int s = 1;
  std::uint64_t union_count = 0;
  std::uint64_t complement_count = 0;
  std::uint64_t total = 0;
};

struct CountTable {
  std::uint64_t q = 0;
  std::vector<CountRow> rows;
};

/// Counts for s = 1..s_max; throws std::logic_error if a row does not
/// partition the ambient space.
CountTable count_table(const Arrangement& a, PrimePower q, int s_max, const CountOptions& opts = {});

struct ZetaCheck {
  bool ok = true;
  /// Lowest power of t where the two series differ; -1 when they agree.
  int first_failing_order = -1;
  RationalSeries counted;
  RationalSeries expected;
};

/// exp(sum N_s t^s / s) from counts of the union or complement against the
/// expansion of z, through t^{s_max}.
ZetaCheck verify_zeta(const CountTable& table, CountMode mode, const ZetaFactorization& z, int s_max);
ZetaCheck verify_zeta(const Arrangement& a, PrimePower q, int s_max, const ZetaFactorization& z, CountMode mode,
                      const CountOptions& opts = {});

struct LefschetzCheck {
  bool ok = true;
  int first_failing_s = -1;
  std::vector<BigInt> traces;
  std::vector<BigInt> expected;
};

/// The count a profile's trace must reproduce for extension degree s:
/// the union for projective unions, the complement for complements, and
/// minus the union (origin included) for punctured central unions, whose
/// profile describes ordinary reduced cohomology.
BigInt lefschetz_target(ProfileKind kind, const CountRow& row);

/// Compares traces against the oracle for s = 1..s_max. Ordinary
/// (non-compact) projective complement profiles are rejected.
LefschetzCheck verify_lefschetz(const CountTable& table, const FrobeniusProfile& f, int s_max);
LefschetzCheck verify_lefschetz(const Arrangement& a, PrimePower q, int s_max, const FrobeniusProfile& f,
                                const CountOptions& opts = {});

}  // namespace arr

#pragma once

// Exact moment sequences: partition counts per category, the classical and
// free moment-cumulant sums, and closed-form reference sequences.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "easycat/catalog.hpp"

namespace easycat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// values[0] is m_1.
struct MomentSequence {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  const Rational& at(std::size_t k) const { return values.at(k - 1); }
  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

MomentSequence count_moments(CategoryId id, std::size_t k_max);

enum class ClosedForm {
  Catalan,
  Bell,
  Motzkin,
  Involutions,
  DoubleFactorial,  // (2k-1)!!, with value 1 at k = 0
  FussCatalan2,     // binom(3k,k) / (2k+1)
  BFormula,         // binom(3k+1,k) / (k+1)
  Factorial,
};

BigInt closed_form(ClosedForm which, std::size_t k);
BigInt binomial(std::size_t n, std::size_t k);

enum class CumulantKind { Free, Classical };
enum class Letter { A, AStar };

struct CumulantSpec {
  CumulantKind kind = CumulantKind::Free;
  // Block value keyed by (number of A, number of A*) in the block.
  std::map<std::pair<std::size_t, std::size_t>, Rational> values;
  // Missing keys are zero when true, an error otherwise.
  bool others_vanish = true;
};

// The word for m_k is `unit` repeated k times: {A} gives the moments of a
// single variable, {A, A*} gives phi((aa*)^k).
MomentSequence moments_from_cumulants(const CumulantSpec& spec,
                                      const std::vector<Letter>& unit,
                                      std::size_t k_max);

enum class Transform { Squeeze, Symmetrize };
MomentSequence transform(const MomentSequence& seq, Transform which);

struct NamedLaw {
  std::string name;
  CumulantSpec spec;
  std::vector<Letter> unit;
};

// semicircle, shifted-semicircle, gaussian, shifted-gaussian, circular,
// shifted-circular, complex-gaussian, shifted-complex-gaussian
const std::vector<NamedLaw>& named_laws();
const NamedLaw& named_law(std::string_view name);

// CSV with header "category,k,m_k".
void write_csv(std::ostream& os, std::string_view label, const MomentSequence& seq);

// Coefficients 0..degree of the square of a truncated power series.
std::vector<BigInt> square_series(const std::vector<BigInt>& coeffs, std::size_t degree);

}  // namespace easycat

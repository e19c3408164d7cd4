#include "easycat/moments.hpp"

#include <algorithm>

#include "easycat/category_ops.hpp"
#include "easycat/error.hpp"

namespace easycat {

MomentSequence count_moments(CategoryId id, std::size_t k_max) {
  if (!has_predicate(id))
    throw NoPredicate("category " + std::string(category_name(id)) +
                      " has no membership predicate");
  if (k_max > kDefaultEnumerationCap)
    throw CapExceeded("k_max " + std::to_string(k_max) + " exceeds the enumeration cap of " +
                      std::to_string(kDefaultEnumerationCap));
  MomentSequence out;
  for (std::size_t k = 1; k <= k_max; ++k)
    out.values.emplace_back(enumerate_category(id, k).size());
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

BigInt closed_form(ClosedForm which, std::size_t k) {
  switch (which) {
    case ClosedForm::Catalan:
      return binomial(2 * k, k) / (k + 1);
    case ClosedForm::Bell: {
      // Bell triangle
      std::vector<BigInt> row{1};
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
      }
      return row.front();
    }
    case ClosedForm::Motzkin: {
      std::vector<BigInt> m(k + 1, 0);
      m[0] = 1;
      for (std::size_t n = 1; n <= k; ++n) {
        m[n] = m[n - 1];
        for (std::size_t i = 0; i + 2 <= n; ++i) m[n] += m[i] * m[n - 2 - i];
      }
      return m[k];
    }
    case ClosedForm::Involutions: {
      BigInt prev = 1, cur = 1;
      for (std::size_t n = 2; n <= k; ++n) {
        BigInt next = cur + (n - 1) * prev;
        prev = cur;
        cur = next;
      }
      return cur;
    }
    case ClosedForm::DoubleFactorial: {
      BigInt out = 1;
      for (std::size_t i = 1; i <= k; ++i) out *= 2 * i - 1;
      return out;
    }
    case ClosedForm::FussCatalan2:
      return binomial(3 * k, k) / (2 * k + 1);
    case ClosedForm::BFormula:
      return binomial(3 * k + 1, k) / (k + 1);
    case ClosedForm::Factorial: {
      BigInt out = 1;
      for (std::size_t i = 2; i <= k; ++i) out *= i;
      return out;
    }
  }
  return 0;
}

namespace {

using Counts = std::pair<std::size_t, std::size_t>;

class BlockValues {
 public:
  BlockValues(const CumulantSpec& spec, bool starred) : spec_(spec) {
    if (!starred) return;
    for (const auto& [key, value] : spec.values)
      if (key.first + key.second > 2 && value != 0)
        throw UndefinedBlockValue(
            "block values of size above 2 are not supported for words with A*");
  }

  Rational operator()(std::size_t a, std::size_t b) const {
    auto it = spec_.values.find({a, b});
    if (it != spec_.values.end()) return it->second;
    if (spec_.others_vanish) return 0;
    throw UndefinedBlockValue("no block value for a block with " + std::to_string(a) +
                              " A and " + std::to_string(b) + " A*");
  }

 private:
  const CumulantSpec& spec_;
};

// Sum over noncrossing partitions of the word of the product of block values.
class FreeSum {
 public:
  FreeSum(const std::vector<Letter>& word, const BlockValues& kappa)
      : w_(word), kappa_(kappa), n_(word.size()) {}

  Rational run() { return interval(0, n_); }

 private:
  // Positions [i, j).
  Rational interval(std::size_t i, std::size_t j) {
    if (i >= j) return 1;
    const std::size_t key = i * (n_ + 1) + j;
    if (auto it = iv_.find(key); it != iv_.end()) return it->second;
    const auto [a, b] = letter(i);
    Rational r = extend(i, j, a, b);
    iv_.emplace(key, r);
    return r;
  }

  // The block containing i has last element p so far and letter counts
  // (a, b); sums over the remaining choices inside [p, j).
  Rational extend(std::size_t p, std::size_t j, std::size_t a, std::size_t b) {
    const Key key{p, j, a, b};
    if (auto it = ext_.find(key); it != ext_.end()) return it->second;
    Rational r = 0;
    const Rational close = kappa_(a, b);
    if (close != 0) r += close * interval(p + 1, j);
    for (std::size_t q = p + 1; q < j; ++q) {
      const Rational gap = interval(p + 1, q);
      if (gap == 0) continue;
      const auto [da, db] = letter(q);
      r += gap * extend(q, j, a + da, b + db);
    }
    ext_.emplace(key, r);
    return r;
  }

  Counts letter(std::size_t i) const {
    return w_[i] == Letter::A ? Counts{1, 0} : Counts{0, 1};
  }

  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  const std::vector<Letter>& w_;
  const BlockValues& kappa_;
  std::size_t n_;
  std::map<std::size_t, Rational> iv_;
  std::map<Key, Rational> ext_;
};

// Classical case: the sum only depends on the letter counts of the word.
class ClassicalSum {
 public:
  explicit ClassicalSum(const BlockValues& kappa) : kappa_(kappa) {}

  Rational run(std::size_t a, std::size_t b) {
    if (a == 0 && b == 0) return 1;
    if (auto it = memo_.find({a, b}); it != memo_.end()) return it->second;
    Rational r = 0;
    // the block through one distinguished point
    const bool use_a = a > 0;
    const std::size_t ra = use_a ? a - 1 : a;
    const std::size_t rb = use_a ? b : b - 1;
    for (std::size_t x = 0; x <= ra; ++x) {
      for (std::size_t y = 0; y <= rb; ++y) {
        const Rational v = kappa_(x + (use_a ? 1 : 0), y + (use_a ? 0 : 1));
        if (v == 0) continue;
        r += Rational(binomial(ra, x) * binomial(rb, y)) * v * run(ra - x, rb - y);
      }
    }
    memo_.emplace(Counts{a, b}, r);
    return r;
  }

 private:
  const BlockValues& kappa_;
  std::map<Counts, Rational> memo_;
};

}  // namespace

MomentSequence moments_from_cumulants(const CumulantSpec& spec,
                                      const std::vector<Letter>& unit,
                                      std::size_t k_max) {
  if (unit.empty()) throw BadParam("the repeating word unit is empty");
  const bool starred = std::find(unit.begin(), unit.end(), Letter::AStar) != unit.end();
  const BlockValues kappa(spec, starred);
  MomentSequence out;
  ClassicalSum classical(kappa);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<Letter> word;
    for (std::size_t r = 0; r < k; ++r) word.insert(word.end(), unit.begin(), unit.end());
    if (spec.kind == CumulantKind::Free) {
      out.values.push_back(FreeSum(word, kappa).run());
    } else {
      const auto a = static_cast<std::size_t>(std::count(word.begin(), word.end(), Letter::A));
      out.values.push_back(classical.run(a, word.size() - a));
    }
  }
  return out;
}

MomentSequence transform(const MomentSequence& seq, Transform which) {
  MomentSequence out;
  if (which == Transform::Squeeze) {
    for (const auto& v : seq.values) {
      out.values.emplace_back(0);
      out.values.push_back(v);
    }
  } else {
    out = seq;
    for (std::size_t k = 1; k <= out.size(); k += 2) out.values[k - 1] = 0;
  }
  return out;
}

namespace {

NamedLaw make_law(std::string name, CumulantKind kind, bool starred, bool shifted) {
  NamedLaw law;
  law.name = std::move(name);
  law.spec.kind = kind;
  if (starred) {
    law.unit = {Letter::A, Letter::AStar};
    law.spec.values[{1, 1}] = 1;
    if (shifted) {
      law.spec.values[{1, 0}] = 1;
      law.spec.values[{0, 1}] = 1;
    }
  } else {
    law.unit = {Letter::A};
    law.spec.values[{2, 0}] = 1;
    if (shifted) law.spec.values[{1, 0}] = 1;
  }
  return law;
}

}  // namespace

const std::vector<NamedLaw>& named_laws() {
  static const std::vector<NamedLaw> laws = {
      make_law("semicircle", CumulantKind::Free, false, false),
      make_law("shifted-semicircle", CumulantKind::Free, false, true),
      make_law("gaussian", CumulantKind::Classical, false, false),
      make_law("shifted-gaussian", CumulantKind::Classical, false, true),
      make_law("circular", CumulantKind::Free, true, false),
      make_law("shifted-circular", CumulantKind::Free, true, true),
      make_law("complex-gaussian", CumulantKind::Classical, true, false),
      make_law("shifted-complex-gaussian", CumulantKind::Classical, true, true),
  };
  return laws;
}

const NamedLaw& named_law(std::string_view name) {
  for (const auto& law : named_laws())
    if (law.name == name) return law;
  throw UnknownName("unknown law '" + std::string(name) + "'");
}

void write_csv(std::ostream& os, std::string_view label, const MomentSequence& seq) {
  os << "category,k,m_k\n";
  for (std::size_t k = 1; k <= seq.size(); ++k)
    os << label << ',' << k << ',' << seq.at(k) << '\n';
}

std::vector<BigInt> square_series(const std::vector<BigInt>& coeffs, std::size_t degree) {
  std::vector<BigInt> out(degree + 1, 0);
  for (std::size_t i = 0; i < coeffs.size() && i <= degree; ++i)
    for (std::size_t j = 0; j < coeffs.size() && i + j <= degree; ++j)
      out[i + j] += coeffs[i] * coeffs[j];
  return out;
}

}  // namespace easycat

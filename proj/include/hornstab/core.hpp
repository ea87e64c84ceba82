#pragma once

// Domain types shared by every reasoner: models, clauses, Horn theories,
// model sets and query decisions.
//
// Variables are 0-indexed internally (bit i is x_{i+1}) and 1-indexed in
// every text format and on the command line.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hornstab {

using Var = std::uint32_t;
using Mask = std::uint64_t;

/// Widest model that fits a machine word.
inline constexpr std::size_t kMaxModelVars = 64;
/// Upper bound on variables for formula-only reasoning (Horn theories, clauses).
inline constexpr std::size_t kMaxTheoryVars = std::size_t{1} << 24;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or expansion would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

// ---------------------------------------------------------------------------
// Model
// ---------------------------------------------------------------------------

/// A truth assignment over n <= 64 variables. Bits at positions >= n are
/// always zero, so bitwise equality is semantic equality.
class Model {
 public:
  Model() = default;
  Model(std::size_t n, Mask bits);

  /// Parses a row such as "0101"; the leftmost character is x1.
  static Model from_string(std::string_view row);
  static Model zeros(std::size_t n) { return Model(n, 0); }
  static Model ones(std::size_t n) { return Model(n, low_bits(n)); }

  std::size_t size() const { return n_; }
  Mask bits() const { return bits_; }
  bool test(Var i) const { return (bits_ >> i) & 1U; }

  Mask on() const { return bits_; }
  Mask off() const { return ~bits_ & low_bits(n_); }
  int count_on() const { return popcount(bits_); }

  /// Componentwise v <= w.
  bool below(const Model& w) const { return (bits_ & ~w.bits_) == 0; }

  std::string to_string() const;

  friend bool operator==(const Model&, const Model&) = default;
  /// Lexicographic order of the row strings ("0101" < "1000").
  friend std::strong_ordering operator<=>(const Model& a, const Model& b);

 private:
  Mask bits_ = 0;
  std::uint32_t n_ = 0;
};

Model operator&(const Model& a, const Model& b);
int hamming(const Model& a, const Model& b);

// ---------------------------------------------------------------------------
// Clauses and terms
// ---------------------------------------------------------------------------

/// A set of literals split into positive and negative variable indices.
/// Both index lists are sorted and duplicate free, and never overlap.
class Literals {
 public:
  Literals() = default;
  Literals(std::vector<Var> pos, std::vector<Var> neg);

  /// Builds from 1-based signed literals, e.g. {-1, -2, 3}.
  static Literals from_signed(std::span<const int> lits);

  const std::vector<Var>& pos() const { return pos_; }
  const std::vector<Var>& neg() const { return neg_; }
  std::size_t size() const { return pos_.size() + neg_.size(); }
  bool empty() const { return pos_.empty() && neg_.empty(); }

  /// Largest variable index + 1 (0 when empty).
  std::size_t span_vars() const;

  /// Bit masks of P and N; requires every index < 64.
  Mask pos_mask() const;
  Mask neg_mask() const;

  /// 1-based signed literals, negatives first.
  std::vector<int> to_signed() const;

  friend bool operator==(const Literals&, const Literals&) = default;
  friend auto operator<=>(const Literals&, const Literals&) = default;

 protected:
  std::vector<Var> pos_;
  std::vector<Var> neg_;
};

/// Disjunction of literals.
class Clause : public Literals {
 public:
  using Literals::Literals;
  Clause() = default;
  explicit Clause(Literals l) : Literals(std::move(l)) {}
  static Clause from_signed(std::initializer_list<int> lits);
  static Clause from_signed(std::span<const int> lits);

  bool is_horn() const { return pos_.size() <= 1; }
  std::string to_string() const;
};

/// Conjunction of literals.
class Term : public Literals {
 public:
  using Literals::Literals;
  Term() = default;
  explicit Term(Literals l) : Literals(std::move(l)) {}
  static Term from_signed(std::initializer_list<int> lits);
  std::string to_string() const;
};

bool eval_clause(const Clause& c, const Model& v);
bool eval_term(const Term& t, const Model& v);

/// The componentwise least model falsifying c: ON = N(c).
Model minimal_falsifier(const Clause& c, std::size_t n);

// ---------------------------------------------------------------------------
// HornTheory
// ---------------------------------------------------------------------------

/// A validated set of Horn clauses over n variables. Duplicate clauses are
/// dropped (first occurrence kept), the remaining order is input order.
class HornTheory {
 public:
  HornTheory() = default;
  /// Throws ValidationError on non-Horn clauses or out-of-range indices.
  /// `duplicates` (optional) receives the number of removed clauses.
  HornTheory(std::size_t n, std::vector<Clause> clauses, std::size_t* duplicates = nullptr);

  std::size_t vars() const { return n_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  /// Total literal occurrences, the usual length measure of a CNF.
  std::size_t length() const { return length_; }
  bool is_negative() const;

  friend bool operator==(const HornTheory&, const HornTheory&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Clause> clauses_;
  std::size_t length_ = 0;
};

// ---------------------------------------------------------------------------
// ModelSet
// ---------------------------------------------------------------------------

/// Duplicate-free set of models sharing one width, kept in canonical order.
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(std::size_t n) : n_(n) {}
  /// Sorts and deduplicates; `duplicates` receives the number removed.
  ModelSet(std::size_t n, std::vector<Model> models, std::size_t* duplicates = nullptr);
  /// Convenience for fixtures: ModelSet::of({"0101", "1001"}).
  static ModelSet of(std::initializer_list<std::string_view> rows);
  static ModelSet from_masks(std::size_t n, std::span<const Mask> masks);

  std::size_t vars() const { return n_; }
  std::size_t size() const { return models_.size(); }
  bool empty() const { return models_.empty(); }
  const std::vector<Model>& models() const { return models_; }
  auto begin() const { return models_.begin(); }
  auto end() const { return models_.end(); }

  bool contains(const Model& v) const;
  bool subset_of(const ModelSet& other) const;
  std::vector<Mask> masks() const;

  ModelSet set_union(const ModelSet& other) const;
  ModelSet set_intersection(const ModelSet& other) const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Model> models_;
};

// ---------------------------------------------------------------------------
// Decision
// ---------------------------------------------------------------------------

enum class Answer { kYes, kNo };

/// Outcome of a deductive query "Phi |= c".
struct Decision {
  Answer answer = Answer::kNo;
  /// For NO answers: a model of Phi falsifying c, when the procedure builds one
  /// and the width fits a Model.
  std::optional<Model> witness;
  /// Derived facts in order (added literals, probed vectors, offending models).
  std::vector<std::string> trace;
  /// Restarts of the main loop (iterative procedures only).
  std::size_t rounds = 0;

  bool yes() const { return answer == Answer::kYes; }

  static Decision Yes() { return Decision{Answer::kYes, std::nullopt, {}, 0}; }
  static Decision No(std::optional<Model> w = std::nullopt) {
    return Decision{Answer::kNo, std::move(w), {}, 0};
  }
};

const char* to_string(Answer a);

// Helpers shared by the bit-parallel procedures.
std::vector<Var> mask_to_vars(Mask m);
Mask vars_to_mask(std::span<const Var> vars);
std::string mask_to_string(Mask m, std::size_t n);

/// Throws DimensionError unless every index of c is < n.
void check_clause_fits(const Clause& c, std::size_t n);
/// Throws DimensionError unless n <= 64 (bit-vector procedures).
void check_model_width(std::size_t n);

}  // namespace hornstab

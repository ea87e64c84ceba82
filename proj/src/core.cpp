#include "hornstab/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace hornstab {

namespace {

std::vector<Var> sorted_unique(std::vector<Var> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct LiteralsHash {
  std::size_t operator()(const Clause& c) const {
    std::size_t h = c.pos().empty() ? 0x9e3779b97f4a7c15ULL : c.pos().front() + 1;
    for (Var v : c.neg()) h = h * 1000003U ^ (v + 0x51ed27U);
    return h;
  }
};

std::string literals_to_string(const Literals& l, const char* sep, const char* empty) {
  if (l.empty()) return empty;
  std::string s;
  auto add = [&](const std::string& lit) {
    if (!s.empty()) s += sep;
    s += lit;
  };
  // Ascending by variable, sign attached.
  std::size_t i = 0, j = 0;
  const auto& p = l.pos();
  const auto& n = l.neg();
  while (i < p.size() || j < n.size()) {
    if (j == n.size() || (i < p.size() && p[i] < n[j])) {
      add("x" + std::to_string(p[i++] + 1));
    } else {
      add("~x" + std::to_string(n[j++] + 1));
    }
  }
  return s;
}

}  // namespace

// ----------------------------------------------------------------- Model

Model::Model(std::size_t n, Mask bits) : bits_(bits), n_(static_cast<std::uint32_t>(n)) {
  check_model_width(n);
  if ((bits & ~low_bits(n)) != 0) {
    throw DimensionError("model bits set beyond width " + std::to_string(n));
  }
}

Model Model::from_string(std::string_view row) {
  if (row.size() > kMaxModelVars) {
    throw DimensionError("model row longer than 64 characters");
  }
  Mask bits = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == '1') {
      bits |= Mask{1} << i;
    } else if (row[i] != '0') {
      throw ParseError("invalid character '" + std::string(1, row[i]) + "' in model row");
    }
  }
  return Model(row.size(), bits);
}

std::string Model::to_string() const { return mask_to_string(bits_, n_); }

std::strong_ordering operator<=>(const Model& a, const Model& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  Mask diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  Mask lowest = diff & (~diff + 1);
  return (a.bits_ & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
}

Model operator&(const Model& a, const Model& b) {
  if (a.size() != b.size()) throw DimensionError("model width mismatch");
  return Model(a.size(), a.bits() & b.bits());
}

int hamming(const Model& a, const Model& b) {
  if (a.size() != b.size()) throw DimensionError("model width mismatch");
  return popcount(a.bits() ^ b.bits());
}

// ----------------------------------------------------------------- Literals

Literals::Literals(std::vector<Var> pos, std::vector<Var> neg)
    : pos_(sorted_unique(std::move(pos))), neg_(sorted_unique(std::move(neg))) {
  std::size_t i = 0, j = 0;
  while (i < pos_.size() && j < neg_.size()) {
    if (pos_[i] == neg_[j]) {
      throw ValidationError("variable x" + std::to_string(pos_[i] + 1) +
                            " occurs both positively and negatively");
    }
    pos_[i] < neg_[j] ? ++i : ++j;
  }
}

Literals Literals::from_signed(std::span<const int> lits) {
  std::vector<Var> pos, neg;
  for (int l : lits) {
    if (l == 0) throw ValidationError("literal 0 is not a variable");
    auto v = static_cast<Var>(std::abs(l) - 1);
    (l > 0 ? pos : neg).push_back(v);
  }
  return Literals(std::move(pos), std::move(neg));
}

std::size_t Literals::span_vars() const {
  std::size_t m = 0;
  if (!pos_.empty()) m = std::max<std::size_t>(m, pos_.back() + 1);
  if (!neg_.empty()) m = std::max<std::size_t>(m, neg_.back() + 1);
  return m;
}

Mask Literals::pos_mask() const { return vars_to_mask(pos_); }
Mask Literals::neg_mask() const { return vars_to_mask(neg_); }

std::vector<int> Literals::to_signed() const {
  std::vector<int> out;
  out.reserve(size());
  for (Var v : neg_) out.push_back(-static_cast<int>(v) - 1);
  for (Var v : pos_) out.push_back(static_cast<int>(v) + 1);
  return out;
}

Clause Clause::from_signed(std::initializer_list<int> lits) {
  return Clause(Literals::from_signed(std::span<const int>(lits.begin(), lits.size())));
}

Clause Clause::from_signed(std::span<const int> lits) { return Clause(Literals::from_signed(lits)); }

std::string Clause::to_string() const { return literals_to_string(*this, " | ", "[]"); }

Term Term::from_signed(std::initializer_list<int> lits) {
  return Term(Literals::from_signed(std::span<const int>(lits.begin(), lits.size())));
}

std::string Term::to_string() const { return literals_to_string(*this, " & ", "T"); }

bool eval_clause(const Clause& c, const Model& v) {
  check_clause_fits(c, v.size());
  return (v.on() & c.pos_mask()) != 0 || (v.off() & c.neg_mask()) != 0;
}

bool eval_term(const Term& t, const Model& v) {
  if (t.span_vars() > v.size()) throw DimensionError("term index exceeds model width");
  return (v.on() & t.pos_mask()) == t.pos_mask() && (v.off() & t.neg_mask()) == t.neg_mask();
}

Model minimal_falsifier(const Clause& c, std::size_t n) {
  check_clause_fits(c, n);
  return Model(n, c.neg_mask());
}

// ----------------------------------------------------------------- HornTheory

HornTheory::HornTheory(std::size_t n, std::vector<Clause> clauses, std::size_t* duplicates)
    : n_(n) {
  if (n > kMaxTheoryVars) throw DimensionError("too many variables");
  std::unordered_set<Clause, LiteralsHash> seen;
  seen.reserve(clauses.size());
  std::size_t dropped = 0;
  clauses_.reserve(clauses.size());
  for (auto& c : clauses) {
    if (!c.is_horn()) {
      throw ValidationError("clause " + c.to_string() + " has more than one positive literal");
    }
    if (c.span_vars() > n) {
      throw ValidationError("clause " + c.to_string() + " uses a variable beyond n=" +
                            std::to_string(n));
    }
    if (!seen.insert(c).second) {
      ++dropped;
      continue;
    }
    length_ += c.size();
    clauses_.push_back(std::move(c));
  }
  if (duplicates) *duplicates = dropped;
}

bool HornTheory::is_negative() const {
  return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.pos().empty(); });
}

// ----------------------------------------------------------------- ModelSet

ModelSet::ModelSet(std::size_t n, std::vector<Model> models, std::size_t* duplicates)
    : n_(n), models_(std::move(models)) {
  check_model_width(n);
  for (const auto& m : models_) {
    if (m.size() != n) throw DimensionError("model width differs from set width");
  }
  std::sort(models_.begin(), models_.end());
  auto before = models_.size();
  models_.erase(std::unique(models_.begin(), models_.end()), models_.end());
  if (duplicates) *duplicates = before - models_.size();
}

ModelSet ModelSet::of(std::initializer_list<std::string_view> rows) {
  std::vector<Model> ms;
  std::size_t n = rows.size() ? rows.begin()->size() : 0;
  for (auto r : rows) ms.push_back(Model::from_string(r));
  return ModelSet(n, std::move(ms));
}

ModelSet ModelSet::from_masks(std::size_t n, std::span<const Mask> masks) {
  std::vector<Model> ms;
  ms.reserve(masks.size());
  for (Mask m : masks) ms.emplace_back(n, m);
  return ModelSet(n, std::move(ms));
}

bool ModelSet::contains(const Model& v) const {
  return std::binary_search(models_.begin(), models_.end(), v);
}

bool ModelSet::subset_of(const ModelSet& other) const {
  return std::includes(other.models_.begin(), other.models_.end(), models_.begin(), models_.end());
}

std::vector<Mask> ModelSet::masks() const {
  std::vector<Mask> out;
  out.reserve(models_.size());
  for (const auto& m : models_) out.push_back(m.bits());
  return out;
}

ModelSet ModelSet::set_union(const ModelSet& other) const {
  if (other.n_ != n_) throw DimensionError("model set width mismatch");
  ModelSet r(n_);
  std::set_union(models_.begin(), models_.end(), other.models_.begin(), other.models_.end(),
                 std::back_inserter(r.models_));
  return r;
}

ModelSet ModelSet::set_intersection(const ModelSet& other) const {
  if (other.n_ != n_) throw DimensionError("model set width mismatch");
  ModelSet r(n_);
  std::set_intersection(models_.begin(), models_.end(), other.models_.begin(),
                        other.models_.end(), std::back_inserter(r.models_));
  return r;
}

// ----------------------------------------------------------------- misc

const char* to_string(Answer a) { return a == Answer::kYes ? "YES" : "NO"; }

std::vector<Var> mask_to_vars(Mask m) {
  std::vector<Var> out;
  while (m) {
    out.push_back(static_cast<Var>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask vars_to_mask(std::span<const Var> vars) {
  Mask m = 0;
  for (Var v : vars) {
    if (v >= kMaxModelVars) throw DimensionError("variable index beyond 64-bit model width");
    m |= Mask{1} << v;
  }
  return m;
}

std::string mask_to_string(Mask m, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((m >> i) & 1U) s[i] = '1';
  }
  return s;
}

void check_clause_fits(const Clause& c, std::size_t n) {
  if (c.span_vars() > n) {
    throw DimensionError("clause " + c.to_string() + " exceeds " + std::to_string(n) + " variables");
  }
}

void check_model_width(std::size_t n) {
  if (n > kMaxModelVars) {
    throw DimensionError("width " + std::to_string(n) + " exceeds the 64-variable model limit");
  }
}

}  // namespace hornstab

#include "hornstab/fuzz.hpp"

#include <random>

#include "hornstab/envelope.hpp"
#include "hornstab/exterior.hpp"
#include "hornstab/horn_engine.hpp"
#include "hornstab/instance_gen.hpp"
#include "hornstab/interior.hpp"
#include "hornstab/oracle.hpp"

namespace hornstab {

namespace {

const char* yn(bool b) { return b ? "YES" : "NO"; }

class Checker {
 public:
  Checker(const FuzzInstance& inst, FuzzReport& report) : inst_(inst), report_(report) {}

  // Compares a path with the expected answer; `space` is the model set the
  // witness of a NO answer has to come from.
  void expect(const char* path, const Decision& d, bool expected, const ModelSet* space) {
    ++report_.checks;
    if (d.yes() != expected) {
      fail(path, std::string("got ") + yn(d.yes()) + ", expected " + yn(expected));
      return;
    }
    if (d.yes() || !space || !d.witness) return;
    if (eval_clause(inst_.clause, *d.witness)) {
      fail(path, "witness " + d.witness->to_string() + " satisfies the clause");
    } else if (!space->contains(*d.witness)) {
      fail(path, "witness " + d.witness->to_string() + " outside the model set");
    }
  }

  void fail(const char* path, const std::string& what) {
    report_.mismatches.push_back("seed " + std::to_string(inst_.seed) + " " + path + " (alpha " +
                                 std::to_string(inst_.alpha) + ", clause " +
                                 inst_.clause.to_string() + "): " + what);
  }

 private:
  const FuzzInstance& inst_;
  FuzzReport& report_;
};

}  // namespace

FuzzInstance make_fuzz_instance(std::uint64_t seed, const FuzzConfig& cfg) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  FuzzInstance inst;
  inst.seed = seed;
  const std::size_t n = pick(1, cfg.max_vars);
  const std::size_t m = pick(0, cfg.max_clauses);
  const std::uint64_t sub = rng();
  inst.theory = cfg.inconsistent ? random_inconsistent_horn(n, m, cfg.max_len, sub)
                                 : random_horn(n, m, cfg.max_len, cfg.neg_only, sub);
  inst.models = all_models(inst.theory, Execution::kSerial);
  inst.charset = characteristic_set(inst.models);
  inst.clause = random_clause(n, cfg.max_len, ClauseShape::kAny, rng());
  inst.alpha = pick(0, n);
  return inst;
}

void check_against_oracle(const FuzzInstance& inst, Execution exec, FuzzReport& report) {
  Checker check(inst, report);
  const Clause& c = inst.clause;
  const std::size_t a = inst.alpha;

  const ModelSet interior = interior_models(inst.models, a, Execution::kSerial);
  const ModelSet exterior = exterior_models(inst.models, a, Execution::kSerial);
  const ModelSet envelope = envelope_models(exterior);
  const bool want_int = oracle_deduce(interior, c);
  const bool want_ext = oracle_deduce(exterior, c);
  const bool want_env = oracle_deduce(envelope, c);

  check.expect("interior/formula", deduce_interior_formula(inst.theory, c, a), want_int, &interior);
  check.expect("interior/formula-reference", deduce_interior_formula_reference(inst.theory, c, a),
               want_int, &interior);
  check.expect("interior/charset", deduce_interior_charset(inst.charset, c, a, {exec}), want_int,
               &interior);

  ExteriorOptions ext{exec};
  check.expect("exterior/formula", deduce_exterior_formula(inst.theory, c, a, ext), want_ext,
               &exterior);
  ext.method = ExteriorMethod::kNegSide;
  check.expect("exterior/charset-neg", deduce_exterior_charset(inst.charset, c, a, ext), want_ext,
               &exterior);
  ext.method = ExteriorMethod::kPosSide;
  check.expect("exterior/charset-pos", deduce_exterior_charset(inst.charset, c, a, ext), want_ext,
               &exterior);

  check.expect("envelope/formula", deduce_envelope_formula(inst.theory, c, a, {exec}), want_env,
               &envelope);
  check.expect("envelope/charset", deduce_envelope_charset(inst.charset, c, a), want_env,
               &envelope);
  ++report.instances;
}

void check_degeneration(const FuzzInstance& inst, Execution exec, FuzzReport& report) {
  Checker check(inst, report);
  const Clause& c = inst.clause;
  const std::size_t a = inst.alpha;

  const bool plain = entails(inst.theory, c).yes();
  if (charset_entails(inst.charset, c).yes() != plain) {
    check.fail("charset_entails", "disagrees with entails");
  }
  ExteriorOptions neg{exec, kDefaultSubsetCap, ExteriorMethod::kNegSide};
  ExteriorOptions pos{exec, kDefaultSubsetCap, ExteriorMethod::kPosSide};
  check.expect("alpha0/interior-formula", deduce_interior_formula(inst.theory, c, 0), plain, nullptr);
  check.expect("alpha0/interior-charset", deduce_interior_charset(inst.charset, c, 0, {exec}), plain,
               nullptr);
  check.expect("alpha0/exterior-formula", deduce_exterior_formula(inst.theory, c, 0, neg), plain,
               nullptr);
  check.expect("alpha0/exterior-neg", deduce_exterior_charset(inst.charset, c, 0, neg), plain, nullptr);
  check.expect("alpha0/exterior-pos", deduce_exterior_charset(inst.charset, c, 0, pos), plain, nullptr);
  check.expect("alpha0/envelope-formula", deduce_envelope_formula(inst.theory, c, 0, {exec}), plain,
               nullptr);
  check.expect("alpha0/envelope-charset", deduce_envelope_charset(inst.charset, c, 0), plain, nullptr);

  if (inst.theory.is_negative()) {
    const bool ext = deduce_exterior_formula(inst.theory, c, a, neg).yes();
    check.expect("negative/envelope-formula", deduce_envelope_formula(inst.theory, c, a, {exec}), ext,
                 nullptr);
    check.expect("negative/envelope-charset", deduce_envelope_charset(inst.charset, c, a), ext,
                 nullptr);
  }
}

FuzzReport run_fuzz(std::size_t count, std::uint64_t base_seed, const FuzzConfig& cfg,
                    Execution exec) {
  FuzzReport report;
  for (std::size_t i = 0; i < count; ++i) {
    FuzzConfig c = cfg;
    if (cfg.inconsistent_every && i % cfg.inconsistent_every == cfg.inconsistent_every - 1) {
      c.inconsistent = true;
    }
    const auto inst = make_fuzz_instance(base_seed + i, c);
    check_against_oracle(inst, exec, report);
  }
  return report;
}

}  // namespace hornstab

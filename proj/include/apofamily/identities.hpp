#ifndef APOFAMILY_IDENTITIES_HPP
#define APOFAMILY_IDENTITIES_HPP

#include <cstdint>

#include "apofamily/auxiliary.hpp"
#include "apofamily/families.hpp"

namespace apofamily {

enum class TheoremId {
    Expansion,
    T3_1,
    T3_2,
    T3_3,
    T3_4,
    T4_1_odd,
    T4_1_even,
    T5_1,
    T5_2,
    T5_3,
    T5_4,
    T5_5,
    T5_6,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

enum class VerifyStatus { exact_pass, pass_within_eps, paper_deviation };
enum class OracleStatus { oracle_pass, oracle_fail };

const char* to_string(VerifyStatus s);
const char* to_string(OracleStatus s);

struct Counterexample {
    long n = 0;
    std::string lhs;
    std::string rhs;
    std::string difference;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::Expansion;
    // Ordered key/value pairs; rationals rendered as "p/q".
    std::vector<std::pair<std::string, std::string>> params;
    long order = 0;
    VerifyStatus status = VerifyStatus::exact_pass;
    OracleStatus oracle_status = OracleStatus::oracle_pass;
    std::vector<std::string> variant_notes;
    std::optional<Counterexample> counterexample;
};

// Deliberate single-building-block corruptions for negative-control tests.
enum class Perturbation { none, expansion_bound, stirling_bump, prefactor_bump };

struct VerifyOptions {
    long order = 8;
    Rational eps = Rational(Integer(1), Integer("1000000000000000000000000000000"));
    Perturbation perturb = Perturbation::none;
};

// Deterministic splitmix64-based sampler; identical seeds give identical
// parameter streams on every platform.
class ParamSampler {
  public:
    explicit ParamSampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    long int_in(long lo, long hi);
    // Nonzero rational with |numerator|, denominator <= 5.
    Rational small_rational(bool allow_negative = true);
    // Rational with 0 < |value| <= 1/2, for Hurwitz-Lerch domains.
    Rational small_contraction();

  private:
    std::uint64_t state_;
};

struct SymmetryArgs {
    long a = 2;  // l (T5_1) or c (T5_2..T5_6)
    long b = 3;  // q or d
    // Rational substitutions, used by T5_6 only.
    Rational x0 = Rational(1);
    Rational y0 = Rational(1);
    Rational X0 = Rational(1);
    Rational Y0 = Rational(1);
    Rational Z0 = Rational(1);
};

struct T3_3Args {
    Rational x0 = Rational(1);  // must be > 0
    Rational y0 = Rational(1);
    Rational z0 = Rational(1);
};

VerificationReport verify_expansion(const FamilyParams& fp, const VerifyOptions& opt);
VerificationReport verify_T3_1(const FamilyParams& fp, const VerifyOptions& opt);
VerificationReport verify_T3_2(const FamilyParams& fp, const VerifyOptions& opt);
VerificationReport verify_T3_3(const FamilyParams& fp, const T3_3Args& args, const VerifyOptions& opt);
VerificationReport verify_T3_4(const FamilyParams& fp, long gamma, const VerifyOptions& opt);
VerificationReport verify_T4_1(const FamilyParams& fp, long s, const VerifyOptions& opt);
VerificationReport verify_T5(TheoremId id, const FamilyParams& fp, const SymmetryArgs& args,
                             const VerifyOptions& opt);

// Samples parameters for `id` deterministically from (seed, trial) and runs
// the matching verifier.
VerificationReport run_trial(TheoremId id, std::uint64_t seed, long trial, const VerifyOptions& opt);

}  // namespace apofamily

#endif

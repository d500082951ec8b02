#ifndef FGT_RETRACTS_HPP
#define FGT_RETRACTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/hom.hpp"
#include "fgt/law.hpp"
#include "fgt/structure.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// An idempotent endomorphism of G with image H, together with its kernel.
struct RetractionCertificate {
  enum class Method { Lemma, BruteForce };

  FiniteGroup g;
  Subgroup h;       // image, as a subgroup of g
  Subgroup kernel;  // N
  Homomorphism rho; // G -> G
  Method method = Method::Lemma;

  /// Full-element-set verification: rho idempotent, identical on H, image
  /// exactly H, kernel as recorded, |ker| * |H| = |G|. Returns false and
  /// fills `why` on the first violation.
  bool check(std::string* why = nullptr) const;
  /// check() or throw.
  void verify() const;
};

struct LemmaCandidate {
  std::size_t kernel_order = 0;
  std::size_t quotient_order = 0;
  bool gave_retraction = false;
};

struct LemmaOutcome {
  std::optional<RetractionCertificate> certificate;
  /// The maximal normal subgroups trivially intersecting H that were tried,
  /// in canonical order, with their quotient orders (diagnostics on failure).
  std::vector<LemmaCandidate> candidates;
};

/// The constructive retraction: choose a maximal normal subgroup N of G
/// trivially intersecting H; the projection G -> G/N is injective on H, and
/// when |G/N| = |H| the composition of the projection with the inverse of its
/// restriction to H is a retraction onto H. Requires H monolithic.
LemmaOutcome find_retraction_lemma(const FiniteGroup& g, const Subgroup& h);

struct BruteOutcome {
  enum class Status { Found, Absent, Exhausted };
  Status status = Status::Absent;
  std::optional<RetractionCertificate> certificate;
  std::uint64_t steps = 0;
};

/// Complete backtracking search for a homomorphism G -> G that fixes H
/// pointwise and lands in H; Absent is only reported after the full search.
BruteOutcome find_retraction_brute(const FiniteGroup& g, const Subgroup& h,
                                   std::uint64_t step_budget = 10'000'000);

struct VarietyCertificate {
  enum class Verdict { Member, NonMember, Unknown };
  Verdict verdict = Verdict::Unknown;

  // member: G is isomorphic to S/T with T normal in S and S a subgroup of
  // base = H^k (certificate verifies by reconstruction)
  int k = 0;
  FiniteGroup base;
  std::optional<Subgroup> section_s;  // subgroup of base
  std::optional<Subgroup> section_t;  // subgroup of base, subset of S
  std::optional<Homomorphism> iso;    // S/T (or S when T trivial) -> G

  // non-member: a law of H failing in G
  std::optional<Law> failing_law;
  std::map<std::string, Permutation> law_witness;

  std::string notes;

  /// Independent reconstruction: member -> rebuild the section and search the
  /// isomorphism again; non-member -> the law holds in H and fails in G.
  bool reconstruct(const FiniteGroup& g, const FiniteGroup& h, std::string* why = nullptr) const;
};

struct VarietyOptions {
  std::uint64_t mono_step_budget = 10'000'000;
  std::uint64_t law_eval_budget = 100'000'000;
  /// Section enumeration runs when the (possibly Sylow-restricted) base has
  /// at most this many elements.
  std::size_t section_enum_cap = 200;
};

/// Three-valued bounded membership test for G in var H. Negative route: the
/// shipped law database. Positive route, for k = 1..k_max: monomorphism into
/// H^k, then sections of H^k (restricted to a Sylow subgroup when G is a
/// p-group; a p-group section always lies inside one).
VarietyCertificate variety_membership(const FiniteGroup& g, const FiniteGroup& h, int k_max,
                                      const LawSet& law_db, const VarietyOptions& opts = {});

struct StarReport {
  std::string base_name;
  std::size_t subgroup_count = 0;
  std::uint64_t sections_examined = 0;
  std::size_t candidate_sections = 0;  // non-nilpotent monolithic
  std::map<std::string, std::size_t> class_counts;
  std::vector<std::string> outliers;  // descriptions; expected empty
  bool conjugacy_deduplicated = false;

  bool zero_outliers() const { return outliers.empty(); }
};

/// Enumerates every subgroup of the base and all quotients of each, filters
/// the non-nilpotent monolithic sections and classifies them against
/// S3, A4, S4. Any section isomorphic to none of the three is an outlier.
StarReport verify_star(const FiniteGroup& base, const SubgroupEnumOptions& enum_opts = {},
                       int threads = 1);

struct AuditCaseResult {
  std::string group_name;
  VarietyCertificate::Verdict variety = VarietyCertificate::Verdict::Unknown;
  bool retraction_found = false;
  bool certificate_ok = false;
  bool brute_found = false;
  bool kernels_agree = false;
  std::size_t kernel_order = 0;
  bool pass = false;
  std::string notes;
};

struct AuditReport {
  std::vector<AuditCaseResult> cases;
  bool all_pass = true;
};

/// For each (G, embedding of H into G): verifies the embedding, checks that
/// G lies in var H (unknowns are reported, never passed silently), runs the
/// lemma construction and cross-checks it with the brute-force search.
AuditReport strong_retract_audit(const FiniteGroup& h,
                                 const std::vector<std::pair<FiniteGroup, Homomorphism>>& tests,
                                 const LawSet& law_db, int k_max = 2,
                                 const VarietyOptions& opts = {});

}  // namespace fgt

#endif

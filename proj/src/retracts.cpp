#include "fgt/retracts.hpp"

#include <algorithm>
#include <sstream>

#include "fgt/group_ops.hpp"
#include "fgt/parallel.hpp"
#include "fgt/search.hpp"

namespace fgt {

bool RetractionCertificate::check(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& map = rho.full_map();
  if (map.size() != g.order()) return fail("map size mismatch");
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (map[map[x]] != map[x]) return fail("rho is not idempotent at " + g.element(x).cycle_string());
  for (auto m : h.members())
    if (map[m] != m) return fail("rho moves " + g.element(m).cycle_string());
  if (rho.image_indices() != h.members()) return fail("image differs from H");
  if (rho.kernel_indices() != kernel.members()) return fail("kernel differs from N");
  if (kernel.order() * h.order() != g.order()) return fail("|ker| * |H| != |G|");
  return true;
}

void RetractionCertificate::verify() const {
  std::string why;
  if (!check(&why)) throw std::logic_error("retraction certificate invalid: " + why);
}

LemmaOutcome find_retraction_lemma(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_group(g)) throw std::invalid_argument("H must be a subgroup of G");
  if (!monolith(h.as_group()).is_monolithic)
    throw std::invalid_argument("H is not monolithic");

  LemmaOutcome out;
  std::vector<Subgroup> normals = normal_subgroups(g);
  std::vector<const Subgroup*> trivially_meeting;
  for (const auto& n : normals)
    if (intersect(n, h).is_trivial()) trivially_meeting.push_back(&n);

  std::vector<const Subgroup*> maximal;
  for (const auto* n : trivially_meeting) {
    bool is_max = true;
    for (const auto* m : trivially_meeting)
      if (m != n && m->order() > n->order() && m->contains(*n)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(n);
  }

  for (const auto* n : maximal) {
    QuotientResult q = quotient(g, *n);
    LemmaCandidate cand;
    cand.kernel_order = n->order();
    cand.quotient_order = q.group.order();
    if (q.group.order() != h.order()) {
      out.candidates.push_back(cand);
      continue;
    }
    // pi is injective on H (kernel meets H trivially), so with equal orders
    // pi|H is a bijection onto G/N; compose pi with its inverse
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> coset_to_h(q.group.order(), kUnset);
    bool clash = false;
    for (auto m : h.members()) {
      std::uint32_t c = q.projection.apply_index(m);
      if (coset_to_h[c] != kUnset) {
        clash = true;
        break;
      }
      coset_to_h[c] = m;
    }
    if (clash) {
      out.candidates.push_back(cand);
      continue;
    }
    std::vector<std::uint32_t> rho_map(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
      rho_map[x] = coset_to_h[q.projection.apply_index(x)];
    RetractionCertificate cert;
    cert.g = g;
    cert.h = h;
    cert.kernel = *n;
    cert.rho = Homomorphism::from_full_map(g, g, std::move(rho_map));
    cert.method = RetractionCertificate::Method::Lemma;
    cert.verify();
    cand.gave_retraction = true;
    out.candidates.push_back(cand);
    out.certificate = std::move(cert);
    return out;
  }
  return out;
}

BruteOutcome find_retraction_brute(const FiniteGroup& g, const Subgroup& h,
                                   std::uint64_t step_budget) {
  if (!h.parent().same_group(g)) throw std::invalid_argument("H must be a subgroup of G");
  HomSearchOptions opts;
  opts.injective = false;
  opts.allowed_images = h.members();
  opts.forced_domain = h.generating_indices();
  opts.forced_images = opts.forced_domain;  // fix H pointwise
  opts.step_budget = step_budget;

  HomSearchResult res = find_homomorphism(g, g, opts);
  BruteOutcome out;
  out.steps = res.steps;
  switch (res.status) {
    case HomSearchResult::Status::Found: {
      out.status = BruteOutcome::Status::Found;
      RetractionCertificate cert;
      cert.g = g;
      cert.h = h;
      cert.kernel = res.hom->kernel_subgroup();
      cert.rho = *res.hom;
      cert.method = RetractionCertificate::Method::BruteForce;
      cert.verify();
      out.certificate = std::move(cert);
      break;
    }
    case HomSearchResult::Status::Absent: out.status = BruteOutcome::Status::Absent; break;
    case HomSearchResult::Status::Exhausted: out.status = BruteOutcome::Status::Exhausted; break;
  }
  return out;
}

namespace {

FiniteGroup direct_power(const FiniteGroup& h, int k) {
  Caps caps;
  caps.max_degree = h.degree() * k + 1;
  caps.max_elements = 1;
  for (int i = 0; i < k; ++i) caps.max_elements *= h.order();
  FiniteGroup base = h;
  for (int i = 1; i < k; ++i) base = direct_product(base, h, caps);
  std::string hname = h.name().empty() ? "H" : h.name();
  return base.with_name(k == 1 ? hname : hname + "^" + std::to_string(k));
}

/// Section search inside an enumerated base: S over subgroups with |G|
/// dividing |S|, T over normal subgroups of S at index |G|.
std::optional<VarietyCertificate> find_section(const FiniteGroup& g, const FiniteGroup& base,
                                               const Subgroup& within, int k,
                                               const VarietyOptions& opts) {
  FiniteGroup ambient = within.as_group();
  std::vector<Subgroup> subs = enumerate_subgroups(ambient);
  for (const auto& s : subs) {
    if (s.order() % g.order() != 0 || s.order() < g.order()) continue;
    FiniteGroup s_group = s.as_group();
    for (const auto& t : normal_subgroups(s_group)) {
      if (s.order() / t.order() != g.order()) continue;
      FiniteGroup q = t.is_trivial() ? s_group : quotient(s_group, t).group;
      auto iso = are_isomorphic(q, g, opts.mono_step_budget);
      if (!iso) continue;
      VarietyCertificate cert;
      cert.verdict = VarietyCertificate::Verdict::Member;
      cert.k = k;
      cert.base = base;
      // lift member indices: t/s live inside `ambient` which lives in `within`
      std::vector<std::uint32_t> s_in_base, t_in_base;
      for (auto m : s.members()) s_in_base.push_back(within.members()[m]);
      for (auto m : t.members()) {
        std::uint32_t in_ambient = s.members()[m];
        t_in_base.push_back(within.members()[in_ambient]);
      }
      std::sort(s_in_base.begin(), s_in_base.end());
      std::sort(t_in_base.begin(), t_in_base.end());
      cert.section_s = Subgroup::unchecked(base, std::move(s_in_base));
      cert.section_t = Subgroup::unchecked(base, std::move(t_in_base));
      cert.iso = iso;
      cert.notes = "section of order " + std::to_string(s.order()) + " modulo " +
                   std::to_string(t.order());
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

bool VarietyCertificate::reconstruct(const FiniteGroup& g, const FiniteGroup& h,
                                     std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (verdict) {
    case Verdict::Unknown: return fail("unknown certificates do not verify");
    case Verdict::NonMember: {
      if (!failing_law) return fail("missing law");
      if (!holds_law(h, *failing_law).holds()) return fail("law does not hold in H");
      if (holds_law(g, *failing_law).holds()) return fail("law does not fail in G");
      return true;
    }
    case Verdict::Member: {
      if (!section_s || !section_t) return fail("missing section");
      if (!section_s->contains(*section_t)) return fail("T not inside S");
      FiniteGroup s_group = section_s->as_group();
      std::vector<std::uint32_t> t_in_s;
      for (auto m : section_t->members())
        t_in_s.push_back(s_group.index_of(base.element(m)));
      std::sort(t_in_s.begin(), t_in_s.end());
      Subgroup t(s_group, std::move(t_in_s));  // validating constructor
      if (!is_normal(s_group, t)) return fail("T not normal in S");
      FiniteGroup q = t.is_trivial() ? s_group : quotient(s_group, t).group;
      if (!are_isomorphic(q, g)) return fail("S/T not isomorphic to G");
      return true;
    }
  }
  return false;
}

VarietyCertificate variety_membership(const FiniteGroup& g, const FiniteGroup& h, int k_max,
                                      const LawSet& law_db, const VarietyOptions& opts) {
  // negative route: a law of H failing in G refutes membership
  for (const auto& law : law_db.laws) {
    if (!holds_law(h, law, opts.law_eval_budget).holds())
      throw std::invalid_argument("law database invalid: " + law.display() +
                                  " does not hold in H");
    LawCheckResult r = holds_law(g, law, opts.law_eval_budget);
    if (r.status == LawCheckResult::Status::Fails) {
      VarietyCertificate cert;
      cert.verdict = VarietyCertificate::Verdict::NonMember;
      cert.failing_law = law;
      cert.law_witness = r.counterexample;
      return cert;
    }
  }

  std::ostringstream notes;

  // order prune: a section of H^k has order dividing |H|^k
  auto h_factors = factorize(static_cast<long long>(h.order()));
  for (auto [p, e] : factorize(static_cast<long long>(g.order()))) {
    bool divides = false;
    for (auto [hp, he] : h_factors)
      if (hp == p) divides = true;
    if (!divides) {
      VarietyCertificate cert;
      cert.verdict = VarietyCertificate::Verdict::Unknown;
      cert.notes = "order has a prime outside |H|, and no law in the database refutes";
      return cert;
    }
  }

  auto g_primes = factorize(static_cast<long long>(g.order()));
  const bool g_is_p_group = g_primes.size() == 1;

  for (int k = 1; k <= k_max; ++k) {
    FiniteGroup base = direct_power(h, k);

    HomSearchResult mono = find_monomorphism(g, base, opts.mono_step_budget);
    if (mono.status == HomSearchResult::Status::Found) {
      VarietyCertificate cert;
      cert.verdict = VarietyCertificate::Verdict::Member;
      cert.k = k;
      cert.base = base;
      cert.section_s = mono.hom->image_subgroup();
      cert.section_t = Subgroup::trivial(base);
      cert.iso = mono.hom;
      cert.notes = "subgroup of the " + std::to_string(k) + "th power";
      return cert;
    }
    if (mono.status == HomSearchResult::Status::Exhausted)
      notes << "monomorphism search at k=" << k << " exhausted; ";

    Subgroup within = Subgroup::whole(base);
    if (g_is_p_group && base.order() > opts.section_enum_cap) {
      within = sylow_subgroup(base, g_primes.front().first);
      notes << "section search restricted to a Sylow " << g_primes.front().first
            << "-subgroup at k=" << k << "; ";
    }
    if (within.order() <= opts.section_enum_cap) {
      auto cert = find_section(g, base, within, k, opts);
      if (cert) return *cert;
    } else {
      notes << "section enumeration skipped at k=" << k << " (base too large); ";
    }
  }

  VarietyCertificate cert;
  cert.verdict = VarietyCertificate::Verdict::Unknown;
  cert.notes = notes.str().empty() ? "no certificate within bounds" : notes.str();
  return cert;
}

StarReport verify_star(const FiniteGroup& base, const SubgroupEnumOptions& enum_opts,
                       int threads) {
  StarReport report;
  report.base_name = base.name().empty() ? "base" : base.name();
  report.conjugacy_deduplicated = enum_opts.dedup_conjugates;

  const FiniteGroup s3 = generate(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)},
                                  Caps{}, "S3");
  const FiniteGroup a4 = generate(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)},
                                  Caps{}, "A4");
  const FiniteGroup s4 = generate(4, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)},
                                  Caps{}, "S4");

  std::vector<Subgroup> subs = enumerate_subgroups(base, enum_opts);
  report.subgroup_count = subs.size();

  struct PerSubgroup {
    std::uint64_t sections = 0;
    std::size_t candidates = 0;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> outliers;
  };

  auto process = [&](std::size_t idx) {
    const Subgroup& s = subs[idx];
    PerSubgroup acc;
    FiniteGroup s_group = s.as_group();
    for (const auto& t : normal_subgroups(s_group)) {
      ++acc.sections;
      std::size_t q_order = s.order() / t.order();
      if (factorize(static_cast<long long>(q_order)).size() < 2)
        continue;  // prime-power sections are nilpotent
      FiniteGroup q = t.is_trivial() ? s_group : quotient(s_group, t).group;
      if (is_nilpotent(q)) continue;
      if (!monolith(q).is_monolithic) continue;
      ++acc.candidates;
      std::string cls;
      if (q.order() == s3.order() && are_isomorphic(q, s3)) cls = "S3";
      else if (q.order() == a4.order() && are_isomorphic(q, a4)) cls = "A4";
      else if (q.order() == s4.order() && are_isomorphic(q, s4)) cls = "S4";
      if (cls.empty()) {
        std::ostringstream o;
        o << "outlier section: |S| = " << s.order() << ", |T| = " << t.order()
          << ", |S/T| = " << q_order;
        acc.outliers.push_back(o.str());
      } else {
        ++acc.counts[cls];
      }
    }
    return acc;
  };

  std::vector<PerSubgroup> results =
      parallel_map<PerSubgroup>(subs.size(), threads, process);
  for (const auto& r : results) {
    report.sections_examined += r.sections;
    report.candidate_sections += r.candidates;
    for (const auto& [k, v] : r.counts) report.class_counts[k] += v;
    report.outliers.insert(report.outliers.end(), r.outliers.begin(), r.outliers.end());
  }
  return report;
}

AuditReport strong_retract_audit(const FiniteGroup& h,
                                 const std::vector<std::pair<FiniteGroup, Homomorphism>>& tests,
                                 const LawSet& law_db, int k_max, const VarietyOptions& opts) {
  AuditReport report;
  for (const auto& [g, embedding] : tests) {
    AuditCaseResult res;
    res.group_name = g.name().empty() ? "G" : g.name();

    if (!embedding.domain().same_group(h) || !embedding.codomain().same_group(g) ||
        !embedding.is_injective()) {
      res.notes = "embedding is not a monomorphism of H into G";
      res.pass = false;
      report.cases.push_back(std::move(res));
      report.all_pass = false;
      continue;
    }
    Subgroup h_in_g = embedding.image_subgroup();

    VarietyCertificate variety = variety_membership(g, h, k_max, law_db, opts);
    res.variety = variety.verdict;
    if (variety.verdict != VarietyCertificate::Verdict::Member) {
      res.notes = "variety membership not established: " + variety.notes;
      res.pass = false;
      report.cases.push_back(std::move(res));
      report.all_pass = false;
      continue;
    }

    LemmaOutcome lemma = find_retraction_lemma(g, h_in_g);
    res.retraction_found = lemma.certificate.has_value();
    if (lemma.certificate) {
      res.certificate_ok = lemma.certificate->check(&res.notes);
      res.kernel_order = lemma.certificate->kernel.order();
    }

    BruteOutcome brute = find_retraction_brute(g, h_in_g);
    res.brute_found = brute.status == BruteOutcome::Status::Found;
    if (lemma.certificate && brute.certificate)
      res.kernels_agree =
          lemma.certificate->kernel.members() == brute.certificate->kernel.members();

    res.pass = res.retraction_found && res.certificate_ok && res.brute_found;
    if (!res.pass && res.notes.empty()) res.notes = "retraction construction failed";
    report.all_pass = report.all_pass && res.pass;
    report.cases.push_back(std::move(res));
  }
  return report;
}

}  // namespace fgt

#include "lpa/classifier.hpp"

#include <limits>

namespace lpa {

const char* to_string(DetSign s) {
  switch (s) {
    case DetSign::Negative: return "NEGATIVE";
    case DetSign::Zero: return "ZERO";
    case DetSign::Positive: return "POSITIVE";
  }
  return "ZERO";
}

DetSign sign_of(const Integer& x) {
  const int s = sgn(x);
  return s < 0 ? DetSign::Negative : s == 0 ? DetSign::Zero : DetSign::Positive;
}

DetSign det_sign(const Graph& g) { return sign_of(det_exact(b_matrix(g))); }

const char* to_string(KPOutcome o) {
  switch (o) {
    case KPOutcome::Isomorphic: return "Isomorphic";
    case KPOutcome::NotIsomorphic: return "NotIsomorphic";
    case KPOutcome::Unknown: return "Unknown";
    case KPOutcome::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

namespace {

std::string pis_summary(const PisReport& r) {
  if (r.purely_infinite_simple) return "purely infinite simple";
  std::string s = "fails:";
  if (!r.sink_free) s += " sink_free";
  if (!r.condition_L) s += " condition_L";
  if (!r.cofinal) s += " cofinal";
  if (!r.has_cycle) s += " has_cycle";
  return s;
}

bool compatible(DetSign a, DetSign b) {
  if (a == DetSign::Zero || b == DetSign::Zero) return true;
  return a == b;
}

}  // namespace

KPVerdict kp_decide(const Graph& e, const Graph& f) {
  KPVerdict v;
  auto done = [&v](KPOutcome o) {
    v.outcome = o;
    return v;
  };

  const PisReport pe = pis_report(e), pf = pis_report(f);
  v.trace.push_back({"pis(E)", pis_summary(pe)});
  v.trace.push_back({"pis(F)", pis_summary(pf)});
  if (!pe.purely_infinite_simple || !pf.purely_infinite_simple) return done(KPOutcome::NotApplicable);

  const PointedK0 ke = cokernel_pointed(e), kf = cokernel_pointed(f);
  const bool same_group = ke.group.factors() == kf.group.factors();
  v.trace.push_back({"k0_factors", group_label(ke.group) + (same_group ? " == " : " != ") +
                                       group_label(kf.group)});
  if (!same_group) return done(KPOutcome::NotIsomorphic);

  const PointedIso iso = pointed_iso_exists(ke.group, ke.distinguished, kf.group, kf.distinguished);
  const char* iso_text = iso == PointedIso::Yes ? "YES" : iso == PointedIso::No ? "NO" : "UNSUPPORTED";
  v.trace.push_back({"pointed_iso", std::string(iso_text) + " " + element_label(ke.distinguished) +
                                        " -> " + element_label(kf.distinguished)});
  if (iso == PointedIso::No) return done(KPOutcome::NotIsomorphic);

  const Integer de = det_exact(b_matrix(e)), df = det_exact(b_matrix(f));
  const DetSign se = sign_of(de), sf = sign_of(df);
  const bool signs_ok = compatible(se, sf);
  v.trace.push_back({"det_sign", de.get_str() + " (" + to_string(se) + "), " + df.get_str() + " (" +
                                     to_string(sf) + ")" + (signs_ok ? " compatible" : " opposite")});
  if (iso == PointedIso::Unsupported) return done(KPOutcome::Unknown);
  return done(signs_ok ? KPOutcome::Isomorphic : KPOutcome::Unknown);
}

std::string CanonicalAlgebra::label() const {
  const std::string base = "L(1," + std::to_string(n) + ")";
  if (d == 1) return base;
  return "M_" + d.get_str() + "(" + base + ")";
}

std::optional<CanonicalAlgebra> canonical_form(const Graph& g) {
  if (!pis_report(g).purely_infinite_simple) return std::nullopt;
  const PointedK0 k0 = cokernel_pointed(g);
  const auto& factors = k0.group.factors();
  if (factors.size() > 1) return std::nullopt;
  if (factors.size() == 1 && factors.front() == 0) return std::nullopt;
  if (det_sign(g) != DetSign::Negative) return std::nullopt;

  const Integer m = factors.empty() ? Integer(1) : factors.front();
  if (!m.fits_slong_p() || m + 1 > Integer(std::numeric_limits<long>::max())) return std::nullopt;
  const Integer coord = factors.empty() ? Integer(0) : k0.distinguished.coords.front();
  CanonicalAlgebra c;
  c.n = m.get_si() + 1;
  c.d = gcd(coord, m);  // gcd(0, m) = m, i.e. d = n - 1
  return c;
}

const char* to_string(CayleyClassId c) {
  switch (c) {
    case CayleyClassId::TrivialK0: return "TRIVIAL_K0";
    case CayleyClassId::Z3: return "Z3";
    case CayleyClassId::Klein4: return "KLEIN4";
    case CayleyClassId::ZxZ: return "ZxZ";
  }
  return "ZxZ";
}

CayleyClass cayley_class(long n) {
  if (n < 1) throw DomainError("cayley_class: n must be at least 1");
  switch (n % 6) {
    case 1:
    case 5: return {CayleyClassId::TrivialK0, {1, 5}, CanonicalAlgebra{2, 1}};
    case 2:
    case 4: return {CayleyClassId::Z3, {2, 4}, CanonicalAlgebra{4, 3}};
    case 3: return {CayleyClassId::Klein4, {3}, std::nullopt};
    default: return {CayleyClassId::ZxZ, {0}, std::nullopt};
  }
}

}  // namespace lpa

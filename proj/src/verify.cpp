#include "rackhom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>

namespace rackhom {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

Verdict proper_verdict(const FiniteGroup& G, const ConjClass& C, const Subgroup& H,
                       bool p_group, bool cyclic, bool nilpotent,
                       bool experimental_nilpotent) {
  const bool theorem_scope = p_group || (experimental_nilpotent && nilpotent);
  if (!theorem_scope)
    return not_applicable(p_group ? "" : "ambient group is not a p-group");
  std::string tag = p_group ? "" : " [experimental: nilpotent ambient]";
  if (H.order() < G.order())
    return holds("<C> has order " + std::to_string(H.order()) + " < " +
                 std::to_string(G.order()) + tag);
  if (cyclic)
    return holds("<C> = G, exclusion applies: G is cyclic of prime power order" + tag);
  return fails("<C> = G but G is not cyclic" + tag);
}

Verdict corollary_verdict(bool central, bool connected, bool p_group, bool nilpotent,
                          bool experimental_nilpotent) {
  const bool theorem_scope = p_group || (experimental_nilpotent && nilpotent);
  if (!theorem_scope) return not_applicable("ambient group is not a p-group");
  std::string tag = p_group ? "" : " [experimental: nilpotent ambient]";
  if (central == connected)
    return holds(std::string(central ? "central and connected" : "non-central and not connected") + tag);
  return fails(central ? "central class fails to be connected" + tag
                       : "non-central class is connected" + tag);
}

Verdict phi_laws_verdict(const Rack& R, const SubrackPoset& P,
                         const OrbitDecomposition& orbits, bool p_group) {
  const RackSet full = rackset_full(R.size());
  for (RackSet S : P.elements) {
    RackSet phiS = closure_phi(R, S, orbits);
    if ((S & ~phiS) != 0) return fails("phi not extensive");
    if (closure_phi(R, phiS, orbits) != phiS) return fails("phi not idempotent");
    if (p_group && R.size() > 1 && phiS == full && S != full)
      return fails("phi(S) = C with S proper");
  }
  for (RackSet S : P.elements)
    for (RackSet T : P.elements) {
      if ((S & ~T) != 0) continue;  // only S <= T
      RackSet pS = closure_phi(R, S, orbits), pT = closure_phi(R, T, orbits);
      if ((pS & ~pT) != 0) return fails("phi not monotone");
    }
  return holds();
}

ClassReport verify_class(const FiniteGroup& G, const ConjClass& C, int index,
                         const PGroupStatus& pstat, bool nilpotent, bool cyclic,
                         const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const bool p_group = pstat.is_p_group();

  ClassReport rep;
  rep.class_index = index;
  rep.rep_id = C.representative;
  rep.rep_label = G.label(C.representative);
  rep.class_size = C.size();
  rep.central = C.size() == 1;

  Subgroup H = subgroup_generated(G, C.member_list);
  rep.h_order = H.order();
  OrbitDecomposition orbits = orbit_decomposition(G, C, H);
  rep.m = orbits.m();
  rep.connected = rep.m == 1;
  rep.sphere_degree = rep.m - 2;

  rep.proper = proper_verdict(G, C, H, p_group, cyclic, nilpotent,
                              opts.experimental_nilpotent);
  rep.corollary = corollary_verdict(rep.central, rep.connected, p_group, nilpotent,
                                    opts.experimental_nilpotent);

  if (C.size() > opts.max_class_size) {
    rep.cap_exceeded = true;
    auto na = not_applicable("class size exceeds enumeration cap");
    rep.maximal_agreement = na;
    rep.phi_laws = na;
    rep.boolean_image = na;
    rep.sphere = na;
    rep.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  Rack R = conjugation_rack(G, C);
  SubrackPoset P = enumerate_subracks(R, std::max(opts.max_class_size,
                                                  kDefaultEnumerationCap));

  // Lemma 2: closed-form maximal subracks vs Hasse covers of the top
  if (!p_group) {
    rep.maximal_agreement = not_applicable("ambient group is not a p-group");
  } else if (rep.m == 1) {
    rep.maximal_agreement =
        not_applicable("single orbit: formula vacuous, handled via m");
  } else {
    auto lemma = maximal_subracks_via_lemma(R, orbits, pstat);
    auto brute = maximal_subracks_bruteforce(P);
    std::sort(lemma.begin(), lemma.end());
    std::sort(brute.begin(), brute.end());
    rep.maximal_agreement = lemma == brute
        ? holds(std::to_string(lemma.size()) + " maximal subracks agree")
        : fails("closed form disagrees with Hasse covers");
  }

  rep.phi_laws = phi_laws_verdict(R, P, orbits, p_group);

  try {
    phi_image(R, P, orbits);
    rep.boolean_image = holds("image is 2^[" + std::to_string(rep.m) + "]");
  } catch (const ImageNotBooleanError& e) {
    rep.boolean_image = fails(e.what());
  }

  OrderComplex K = order_complex(P);
  rep.homology = reduced_homology(K);
  if (p_group) {
    rep.sphere = is_homology_sphere(rep.homology, rep.sphere_degree)
        ? holds("reduced homology of S^(" + std::to_string(rep.sphere_degree) + ")")
        : fails("reduced homology is not that of S^(" +
                std::to_string(rep.sphere_degree) + ")");
  } else {
    rep.sphere = not_applicable("ambient group is not a p-group");
  }

  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

GroupReport verify_group(const FiniteGroup& G, const VerifyOptions& opts,
                         std::string descriptor) {
  GroupReport rep;
  rep.descriptor = std::move(descriptor);
  rep.order = G.order();
  rep.p = p_group_status(G);
  rep.nilpotent = is_nilpotent(G);
  rep.cyclic = is_cyclic(G);

  auto classes = conjugacy_classes(G);
  if (opts.parallel && classes.size() > 1) {
    std::vector<std::future<ClassReport>> futures;
    for (std::size_t i = 0; i < classes.size(); ++i)
      futures.push_back(std::async(std::launch::async, [&, i] {
        return verify_class(G, classes[i], static_cast<int>(i), rep.p,
                            rep.nilpotent, rep.cyclic, opts);
      }));
    for (auto& f : futures) rep.classes.push_back(f.get());
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i)
      rep.classes.push_back(verify_class(G, classes[i], static_cast<int>(i), rep.p,
                                         rep.nilpotent, rep.cyclic, opts));
  }

  rep.overall = VerdictStatus::Holds;
  for (const auto& c : rep.classes) {
    rep.any_cap_exceeded |= c.cap_exceeded;
    for (const Verdict* v : {&c.proper, &c.corollary, &c.maximal_agreement,
                             &c.phi_laws, &c.boolean_image, &c.sphere})
      if (v->status == VerdictStatus::Fails) rep.overall = VerdictStatus::Fails;
  }
  return rep;
}

std::vector<Verdict> verify_lemma_proper(const FiniteGroup& G) {
  auto pstat = p_group_status(G);
  if (!pstat.is_p_group())
    throw NotApplicableError("lemma requires a p-group");
  const bool cyclic = is_cyclic(G);
  std::vector<Verdict> out;
  for (const auto& C : conjugacy_classes(G)) {
    Subgroup H = subgroup_generated(G, C.member_list);
    out.push_back(proper_verdict(G, C, H, true, cyclic, true, false));
  }
  return out;
}

}  // namespace rackhom

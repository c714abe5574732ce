#include "vdh/campaigns.hpp"

#include <sstream>

namespace vdh {

namespace {

std::mt19937_64 seeded(const CampaignConfig& cfg, std::uint64_t stream) {
  std::seed_seq seq{cfg.seed, stream};
  return std::mt19937_64(seq);
}

std::string describe(const SymTreePair& e) { return format_element_inline(e); }

}  // namespace

CantorPoint sample_point(int arity, std::mt19937_64& rng,
                         std::size_t max_prefix, std::size_t max_period) {
  std::uniform_int_distribution<std::size_t> plen(0, max_prefix);
  std::uniform_int_distribution<std::size_t> wlen(1, max_period);
  std::uniform_int_distribution<int> digit(0, arity - 1);
  std::string prefix, period;
  std::size_t np = plen(rng), nw = wlen(rng);
  for (std::size_t i = 0; i < np; ++i)
    prefix += static_cast<char>('0' + digit(rng));
  for (std::size_t i = 0; i < nw; ++i)
    period += static_cast<char>('0' + digit(rng));
  return CantorPoint(arity, prefix, period);
}

PropertyResult run_group_axioms(const std::shared_ptr<const LocalGroup>& g,
                                const CampaignConfig& cfg) {
  PropertyResult res{"group-axioms", cfg.group_axiom_triples, true, ""};
  auto rng = seeded(cfg, 1);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  SymTreePair id = identity_element(g);
  for (std::size_t i = 0; i < cfg.group_axiom_triples; ++i) {
    SymTreePair x = sample_element(pool, rng, steps(rng));
    SymTreePair y = sample_element(pool, rng, steps(rng));
    SymTreePair z = sample_element(pool, rng, steps(rng));
    if (!(compose(compose(x, y), z) == compose(x, compose(y, z)))) {
      res.pass = false;
      res.counterexample = "associativity: x=" + describe(x) +
                           " y=" + describe(y) + " z=" + describe(z);
      break;
    }
    if (!(compose(x, inverse(x)) == id) || !(compose(inverse(x), x) == id)) {
      res.pass = false;
      res.counterexample = "inverse law: x=" + describe(x);
      break;
    }
    if (!(compose(id, x) == reduce(x)) || !(compose(x, id) == reduce(x))) {
      res.pass = false;
      res.counterexample = "identity law: x=" + describe(x);
      break;
    }
  }
  return res;
}

PropertyResult run_reduction_confluence(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  PropertyResult res{"reduction-confluence", cfg.confluence_trials, true, ""};
  auto rng = seeded(cfg, 2);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  for (std::size_t i = 0; i < cfg.confluence_trials; ++i) {
    SymTreePair e = sample_element(pool, rng, steps(rng));
    SymTreePair blown = e;
    for (std::size_t k = 0; k < cfg.confluence_expansions; ++k) {
      const auto& leaves = blown.domain().leaves();
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      blown = expand(blown, leaves[pick(rng)]);
    }
    if (!(reduce(blown) == e)) {
      res.pass = false;
      res.counterexample = "expansions did not reduce back: e=" + describe(e);
      break;
    }
  }
  return res;
}

PropertyResult run_action_homomorphism(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  PropertyResult res{"action-homomorphism", cfg.action_pairs, true, ""};
  auto rng = seeded(cfg, 3);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  for (std::size_t i = 0; i < cfg.action_pairs; ++i) {
    SymTreePair f = sample_element(pool, rng, steps(rng));
    SymTreePair h = sample_element(pool, rng, steps(rng));
    SymTreePair gf = compose(h, f);
    for (std::size_t p = 0; p < cfg.action_points; ++p) {
      CantorPoint c = sample_point(g->arity(), rng);
      if (!(act(gf, c) == act(h, act(f, c)))) {
        res.pass = false;
        res.counterexample = "act(g∘f, c) != act(g, act(f, c)) at c=" +
                             format_point(c) + " f=" + describe(f) +
                             " g=" + describe(h);
        return res;
      }
    }
  }
  return res;
}

PropertyResult run_pi_homomorphism(const std::shared_ptr<const LocalGroup>& g,
                                   const CampaignConfig& cfg) {
  PropertyResult res{"pi-homomorphism", cfg.pi_pairs, true, ""};
  auto rng = seeded(cfg, 4);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  for (std::size_t i = 0; i < cfg.pi_pairs; ++i) {
    SymTreePair f = sample_element(pool, rng, steps(rng));
    SymTreePair h = sample_element(pool, rng, steps(rng));
    if (!(pi(compose(h, f)) == compose(pi(h), pi(f)))) {
      res.pass = false;
      res.counterexample = "pi(g∘f) != pi(g)∘pi(f): f=" + describe(f) +
                           " g=" + describe(h);
      break;
    }
  }
  return res;
}

PropertyResult run_pi_section_roundtrip(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  PropertyResult res{"pi-section-roundtrip", cfg.pi_section_samples, true, ""};
  auto rng = seeded(cfg, 5);
  auto image = g->image_group();
  auto pool = generator_pool(image);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  for (std::size_t i = 0; i < cfg.pi_section_samples; ++i) {
    SymTreePair v = sample_element(pool, rng, steps(rng));
    if (!(pi(pi_section(g, v)) == v)) {
      res.pass = false;
      res.counterexample = "pi(section(v)) != v: v=" + describe(v);
      break;
    }
  }
  return res;
}

PropertyResult run_retract_iota(const std::shared_ptr<const LocalGroup>& g) {
  PropertyResult res{"retract-iota", g->order(), true, ""};
  for (std::uint32_t i = 0; i < g->order(); ++i) {
    LocalElement h{g, i};
    LocalElement r = retract(iota(h));
    if (r.index != i) {
      res.pass = false;
      res.counterexample = "retract(iota(" + g->word(i) + ")) = " +
                           g->word(r.index);
      break;
    }
  }
  return res;
}

PropertyResult run_retraction_law_iota(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  PropertyResult res{"retraction-law-iota", cfg.retraction_samples, true, ""};
  auto rng = seeded(cfg, 6);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  std::uniform_int_distribution<std::uint32_t> pick_h(
      0, static_cast<std::uint32_t>(g->order() - 1));
  for (std::size_t i = 0; i < cfg.retraction_samples; ++i) {
    SymTreePair e = sample_element(pool, rng, steps(rng));
    LocalElement s{g, pick_h(rng)};
    // Products read left to right: appending iota(s) to g applies it last.
    LocalElement r = retract(compose(iota(s), e));
    LocalElement rg = retract(e);
    if (!(r == rg) && !(r == mul(s, rg))) {
      res.pass = false;
      res.counterexample = "r(g·iota(s)) outside {r(g), s·r(g)}: g=" +
                           describe(e) + " s=" + g->word(s.index);
      break;
    }
  }
  return res;
}

PropertyResult run_retraction_law_unlabeled(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  PropertyResult res{"retraction-law-unlabeled", cfg.retraction_samples, true,
                     ""};
  auto rng = seeded(cfg, 7);
  auto pool = generator_pool(g);
  auto unlabeled = vd_generating_set(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  std::uniform_int_distribution<std::size_t> pick_u(0, unlabeled.size() - 1);
  for (std::size_t i = 0; i < cfg.retraction_samples; ++i) {
    SymTreePair e = sample_element(pool, rng, steps(rng));
    // A random unlabeled element: a short product of unlabeled generators.
    SymTreePair u = unlabeled[pick_u(rng)];
    if (steps(rng) % 2 == 0) u = compose(u, unlabeled[pick_u(rng)]);
    LocalElement r = retract(compose(u, e));
    if (!(r == retract(e))) {
      res.pass = false;
      res.counterexample = "r(g·u) != r(g): g=" + describe(e) +
                           " u=" + describe(u);
      break;
    }
  }
  return res;
}

PropertyResult run_periodicity(const std::shared_ptr<const LocalGroup>& g,
                               const CampaignConfig& cfg) {
  PropertyResult res{"periodicity-preserved", cfg.periodicity_samples, true,
                     ""};
  auto rng = seeded(cfg, 8);
  auto pool = generator_pool(g);
  std::uniform_int_distribution<std::size_t> steps(0, cfg.sample_steps);
  for (std::size_t i = 0; i < cfg.periodicity_samples; ++i) {
    SymTreePair e = sample_element(pool, rng, steps(rng));
    CantorPoint c = sample_point(g->arity(), rng);
    CantorPoint out = act(e, c);
    if (out.period().size() != c.period().size()) {
      res.pass = false;
      res.counterexample = "period length changed: c=" + format_point(c) +
                           " -> " + format_point(out) + " under " +
                           describe(e);
      break;
    }
  }
  return res;
}

std::vector<PropertyResult> run_axioms_campaign(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg) {
  std::vector<PropertyResult> out;
  out.push_back(run_group_axioms(g, cfg));
  out.push_back(run_reduction_confluence(g, cfg));
  out.push_back(run_action_homomorphism(g, cfg));
  out.push_back(run_pi_homomorphism(g, cfg));
  out.push_back(run_pi_section_roundtrip(g, cfg));
  out.push_back(run_retract_iota(g));
  out.push_back(run_retraction_law_iota(g, cfg));
  out.push_back(run_retraction_law_unlabeled(g, cfg));
  out.push_back(run_periodicity(g, cfg));
  return out;
}

}  // namespace vdh

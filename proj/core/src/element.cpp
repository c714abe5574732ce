#include "vdh/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vdh {

SymTreePair::SymTreePair(std::shared_ptr<const LocalGroup> group,
                         CompleteTree domain, std::vector<LeafAddress> targets,
                         std::vector<std::uint32_t> labels)
    : group_(std::move(group)),
      domain_(std::move(domain)),
      targets_(std::move(targets)),
      labels_(std::move(labels)),
      range_(CompleteTree(domain_.arity(), targets_)) {
  if (!group_) fail(ErrorCode::Internal, "element without a local group");
  if (domain_.arity() != group_->arity())
    fail(ErrorCode::ArityMismatch, "tree arity does not match the group arity");
  if (targets_.size() != domain_.leaf_count() ||
      labels_.size() != domain_.leaf_count())
    fail(ErrorCode::ParseError, "leaf map size does not match the domain tree");
  // The range constructor has already checked that the targets form a
  // complete tree; equal cardinality makes the map a bijection provided the
  // targets are pairwise distinct, which maximal prefix-freeness gives.
  for (std::uint32_t l : labels_)
    if (l >= group_->order())
      fail(ErrorCode::ParseError, "label index outside the group closure");
}

std::string SymTreePair::key() const {
  std::string out;
  for (std::size_t i = 0; i < leaf_count(); ++i) {
    out += domain_leaf(i).digits();
    out += '>';
    out += targets_[i].digits();
    out += ':';
    out += std::to_string(labels_[i]);
    out += ';';
  }
  return out;
}

SymTreePair identity_element(const std::shared_ptr<const LocalGroup>& g) {
  return SymTreePair(g, CompleteTree::trivial(g->arity()),
                     {LeafAddress::root()}, {g->identity_index()});
}

SymTreePair expand(const SymTreePair& e, const LeafAddress& leaf,
                   std::size_t depth_limit) {
  auto idx = e.domain().leaf_index(leaf);
  if (!idx)
    fail(ErrorCode::NotALeaf,
         "address " + format_leaf(leaf) + " is not a domain leaf");
  const LeafAddress& t = e.target(*idx);
  if (leaf.depth() + 1 > depth_limit || t.depth() + 1 > depth_limit)
    fail(ErrorCode::DepthLimit,
         "expansion exceeds depth limit " + std::to_string(depth_limit));
  std::uint32_t h = e.label_index(*idx);
  Perm sigma = e.group()->q_perm(h);
  int d = e.domain().arity();

  std::vector<LeafAddress> dleaves;
  std::vector<LeafAddress> targets;
  std::vector<std::uint32_t> labels;
  dleaves.reserve(e.leaf_count() + static_cast<std::size_t>(d) - 1);
  for (std::size_t i = 0; i < e.leaf_count(); ++i) {
    if (i == *idx) {
      for (int j = 0; j < d; ++j) {
        dleaves.push_back(leaf.child(j));
        targets.push_back(t.child(sigma(j)));
        labels.push_back(h);
      }
    } else {
      dleaves.push_back(e.domain_leaf(i));
      targets.push_back(e.target(i));
      labels.push_back(e.label_index(i));
    }
  }
  // Domain leaves stay sorted after an in-place expansion.
  return SymTreePair(e.group(), CompleteTree(d, std::move(dleaves)),
                     std::move(targets), std::move(labels));
}

namespace {

// Index of a contractible caret: d sibling domain leaves with one common
// label h whose targets are the siblings of a common range parent in the
// order twisted by q(h). Returns the position of the first sibling, or
// npos.
std::size_t find_contraction(const SymTreePair& e) {
  int d = e.domain().arity();
  std::size_t n = e.leaf_count();
  for (std::size_t i = 0; i + static_cast<std::size_t>(d) <= n; ++i) {
    const LeafAddress& first = e.domain_leaf(i);
    if (first.is_root() || first.last_digit() != 0) continue;
    LeafAddress parent = first.parent();
    bool siblings = true;
    for (int j = 1; j < d; ++j)
      if (e.domain_leaf(i + static_cast<std::size_t>(j)) != parent.child(j)) {
        siblings = false;
        break;
      }
    if (!siblings) continue;
    std::uint32_t h = e.label_index(i);
    bool same_label = true;
    for (int j = 1; j < d; ++j)
      if (e.label_index(i + static_cast<std::size_t>(j)) != h) {
        same_label = false;
        break;
      }
    if (!same_label) continue;
    const LeafAddress& t0 = e.target(i);
    if (t0.is_root()) continue;
    LeafAddress tparent = t0.parent();
    Perm sigma = e.group()->q_perm(h);
    bool twisted = true;
    for (int j = 0; j < d && twisted; ++j)
      twisted = e.target(i + static_cast<std::size_t>(j)) ==
                tparent.child(sigma(j));
    if (twisted) return i;
  }
  return static_cast<std::size_t>(-1);
}

SymTreePair contract_at(const SymTreePair& e, std::size_t pos) {
  int d = e.domain().arity();
  std::vector<LeafAddress> dleaves;
  std::vector<LeafAddress> targets;
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < e.leaf_count(); ++i) {
    if (i == pos) {
      dleaves.push_back(e.domain_leaf(i).parent());
      targets.push_back(e.target(i).parent());
      labels.push_back(e.label_index(i));
      i += static_cast<std::size_t>(d) - 1;
    } else {
      dleaves.push_back(e.domain_leaf(i));
      targets.push_back(e.target(i));
      labels.push_back(e.label_index(i));
    }
  }
  return SymTreePair(e.group(), CompleteTree(d, std::move(dleaves)),
                     std::move(targets), std::move(labels));
}

}  // namespace

SymTreePair reduce(const SymTreePair& e) {
  SymTreePair cur = e;
  for (;;) {
    std::size_t pos = find_contraction(cur);
    if (pos == static_cast<std::size_t>(-1)) return cur;
    cur = contract_at(cur, pos);
  }
}

bool is_reduced(const SymTreePair& e) {
  return find_contraction(e) == static_cast<std::size_t>(-1);
}

SymTreePair expand_to_domain(const SymTreePair& e, const CompleteTree& target,
                             std::size_t depth_limit) {
  if (!refines(target, e.domain()))
    fail(ErrorCode::Internal, "target does not refine the domain tree");
  SymTreePair cur = e;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& leaf : cur.domain().leaves()) {
      if (!target.is_leaf(leaf)) {
        cur = expand(cur, leaf, depth_limit);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

SymTreePair expand_to_range(const SymTreePair& e, const CompleteTree& target,
                            std::size_t depth_limit) {
  if (!refines(target, e.range()))
    fail(ErrorCode::Internal, "target does not refine the range tree");
  SymTreePair cur = e;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < cur.leaf_count(); ++i) {
      if (!target.is_leaf(cur.target(i))) {
        cur = expand(cur, cur.domain_leaf(i), depth_limit);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

SymTreePair compose(const SymTreePair& g, const SymTreePair& f,
                    std::size_t depth_limit) {
  if (g.group() != f.group())
    fail(ErrorCode::GroupMismatch, "composition across different local groups");
  CompleteTree mid = common_refinement(f.range(), g.domain());
  SymTreePair fe = expand_to_range(f, mid, depth_limit);
  SymTreePair ge = expand_to_domain(g, mid, depth_limit);

  std::vector<LeafAddress> targets(fe.leaf_count());
  std::vector<std::uint32_t> labels(fe.leaf_count());
  for (std::size_t i = 0; i < fe.leaf_count(); ++i) {
    auto j = ge.domain().leaf_index(fe.target(i));
    if (!j) fail(ErrorCode::Internal, "composition trees do not align");
    targets[i] = ge.target(*j);
    labels[i] = g.group()->mul_index(ge.label_index(*j), fe.label_index(i));
  }
  return reduce(SymTreePair(g.group(), fe.domain(), std::move(targets),
                            std::move(labels)));
}

SymTreePair inverse(const SymTreePair& e) {
  std::vector<LeafAddress> dleaves = e.range().leaves();
  std::vector<LeafAddress> targets(dleaves.size());
  std::vector<std::uint32_t> labels(dleaves.size());
  for (std::size_t i = 0; i < e.leaf_count(); ++i) {
    auto j = e.range().leaf_index(e.target(i));
    targets[*j] = e.domain_leaf(i);
    labels[*j] = e.group()->inverse_index(e.label_index(i));
  }
  return reduce(SymTreePair(e.group(), CompleteTree(e.domain().arity(),
                                                    std::move(dleaves)),
                            std::move(targets), std::move(labels)));
}

CantorPoint act(const SymTreePair& e, const CantorPoint& c) {
  if (c.arity() != e.domain().arity())
    fail(ErrorCode::ArityMismatch, "point arity does not match the element");
  LeafAddress l = nearest_leaf(e.domain(), c);
  std::size_t idx = *e.domain().leaf_index(l);
  Perm sigma = e.group()->q_perm(e.label_index(idx));

  // Tail of c after |l| digits, still eventually periodic.
  std::string tail_prefix;
  std::string tail_period;
  if (l.depth() < c.prefix().size()) {
    tail_prefix = c.prefix().substr(l.depth());
    tail_period = c.period();
  } else {
    std::size_t off = (l.depth() - c.prefix().size()) % c.period().size();
    tail_period = c.period().substr(off) + c.period().substr(0, off);
  }
  auto apply = [&sigma](std::string& s) {
    for (char& ch : s) ch = static_cast<char>('0' + sigma(ch - '0'));
  };
  apply(tail_prefix);
  apply(tail_period);
  return CantorPoint(c.arity(), e.target(idx).digits() + tail_prefix,
                     tail_period);
}

bool equals(const SymTreePair& a, const SymTreePair& b) {
  if (a.group() != b.group())
    fail(ErrorCode::GroupMismatch, "comparison across different local groups");
  return reduce(a) == reduce(b);
}

SymTreePair pi(const SymTreePair& e) {
  auto image = e.group()->image_group();
  std::vector<std::uint32_t> labels(e.leaf_count());
  for (std::size_t i = 0; i < e.leaf_count(); ++i)
    labels[i] = image->index_of(e.group()->q_perm(e.label_index(i)));
  std::vector<LeafAddress> targets(e.leaf_count());
  for (std::size_t i = 0; i < e.leaf_count(); ++i) targets[i] = e.target(i);
  return reduce(SymTreePair(image, e.domain(), std::move(targets),
                            std::move(labels)));
}

SymTreePair pi_section(const std::shared_ptr<const LocalGroup>& base,
                       const SymTreePair& v) {
  if (v.group() != base->image_group())
    fail(ErrorCode::GroupMismatch,
         "element is not over the image group of the given base group");
  std::vector<std::uint32_t> labels(v.leaf_count());
  for (std::size_t i = 0; i < v.leaf_count(); ++i)
    labels[i] = base->section_index(v.label_index(i));
  std::vector<LeafAddress> targets(v.leaf_count());
  for (std::size_t i = 0; i < v.leaf_count(); ++i) targets[i] = v.target(i);
  return reduce(SymTreePair(base, v.domain(), std::move(targets),
                            std::move(labels)));
}

SymTreePair iota(const LocalElement& h) {
  const auto& g = h.group;
  int d = g->arity();
  CompleteTree one = expand_leaf(CompleteTree::trivial(d), LeafAddress::root());
  std::vector<LeafAddress> targets = one.leaves();
  std::vector<std::uint32_t> labels(static_cast<std::size_t>(d),
                                    g->identity_index());
  labels[0] = h.index;
  return reduce(SymTreePair(g, one, std::move(targets), std::move(labels)));
}

LocalElement retract(const SymTreePair& e) {
  SymTreePair r = reduce(e);
  return r.label(0);
}

std::vector<SymTreePair> vd_generating_set(
    const std::shared_ptr<const LocalGroup>& g) {
  std::vector<SymTreePair> out;
  int d = g->arity();
  std::uint32_t id = g->identity_index();
  for (std::size_t carets = 1; carets <= 2; ++carets) {
    auto trees = enumerate_trees(d, carets);
    for (const auto& dom : trees) {
      for (const auto& ran : trees) {
        std::size_t n = dom.leaf_count();
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<LeafAddress> targets(n);
          for (std::size_t i = 0; i < n; ++i)
            targets[i] = ran.leaves()[perm[i]];
          SymTreePair e(g, dom, std::move(targets),
                        std::vector<std::uint32_t>(n, id));
          if (is_reduced(e)) out.push_back(std::move(e));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return out;
}

std::vector<SymTreePair> enumerate_canonical_elements(
    const std::shared_ptr<const LocalGroup>& g, std::size_t max_carets) {
  std::vector<SymTreePair> out;
  for (std::size_t c = 0; c <= max_carets; ++c) {
    auto trees = enumerate_trees(g->arity(), c);
    for (const auto& dom : trees)
      for (const auto& ran : trees) {
        std::size_t n = dom.leaf_count();
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<std::uint32_t> labels(n, g->identity_index());
          for (;;) {
            std::vector<LeafAddress> targets(n);
            for (std::size_t i = 0; i < n; ++i)
              targets[i] = ran.leaves()[perm[i]];
            SymTreePair e(g, dom, std::move(targets), labels);
            if (is_reduced(e)) out.push_back(std::move(e));
            std::size_t pos = 0;
            while (pos < n) {
              if (++labels[pos] < g->order()) break;
              labels[pos] = 0;
              ++pos;
            }
            if (pos == n) break;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  return out;
}

std::vector<SymTreePair> bfs_ball(const std::vector<SymTreePair>& gens,
                                  std::size_t radius, const BallLimits& limits,
                                  std::vector<std::size_t>* sizes) {
  if (gens.empty()) fail(ErrorCode::ParseError, "generator list is empty");
  const auto& group = gens.front().group();
  for (const auto& g : gens)
    if (g.group() != group)
      fail(ErrorCode::GroupMismatch, "generators over different local groups");

  std::vector<SymTreePair> ball;
  std::unordered_map<std::string, std::size_t> seen;
  auto push = [&](SymTreePair e) -> bool {
    std::string k = e.key();
    if (seen.contains(k)) return false;
    if (ball.size() >= limits.max_elements)
      fail(ErrorCode::BallLimit, "ball exceeds the size limit " +
                                     std::to_string(limits.max_elements));
    seen.emplace(std::move(k), ball.size());
    ball.push_back(std::move(e));
    return true;
  };
  push(identity_element(group));
  if (sizes) sizes->assign(1, ball.size());

  std::size_t frontier_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t frontier_end = ball.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i)
      for (const auto& g : gens)
        push(compose(ball[i], g, limits.depth_limit));
    frontier_begin = frontier_end;
    if (sizes) sizes->push_back(ball.size());
    if (frontier_begin == ball.size()) {
      if (sizes)
        while (sizes->size() <= radius) sizes->push_back(ball.size());
      break;
    }
  }
  return ball;
}

std::vector<SymTreePair> generator_pool(
    const std::shared_ptr<const LocalGroup>& g) {
  std::vector<SymTreePair> pool;
  std::unordered_map<std::string, bool> seen;
  auto push = [&](SymTreePair e) {
    SymTreePair r = reduce(e);
    std::string k = r.key();
    if (!seen.emplace(k, true).second) return;
    pool.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < g->generators().size(); ++i) {
    LocalElement h{g, g->generator_index(i)};
    push(iota(h));
    push(iota(inv(h)));
  }
  for (auto& e : vd_generating_set(g)) push(std::move(e));
  return pool;
}

SymTreePair sample_element(const std::vector<SymTreePair>& pool,
                           std::mt19937_64& rng, std::size_t steps) {
  if (pool.empty()) fail(ErrorCode::ParseError, "empty sampling pool");
  SymTreePair e = identity_element(pool.front().group());
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < steps; ++i) e = compose(e, pool[pick(rng)]);
  return e;
}

SymTreePair parse_element_maps(const std::vector<std::string>& map_lines,
                               const std::shared_ptr<const LocalGroup>& g,
                               const std::string& filename) {
  std::vector<LeafAddress> dleaves;
  std::vector<LeafAddress> targets;
  std::vector<std::uint32_t> labels;
  std::map<std::string, std::uint32_t> gen_index;
  for (std::size_t i = 0; i < g->generators().size(); ++i)
    gen_index[g->generators()[i].name] =
        g->generator_index(i);

  std::size_t lineno = 0;
  for (const auto& raw : map_lines) {
    ++lineno;
    std::istringstream ls(raw);
    std::string dom_word, arrow, ran_word, colon, word;
    if (!(ls >> dom_word >> arrow >> ran_word >> colon >> word) ||
        arrow != "->" || colon != ":")
      fail(ErrorCode::ParseError,
           filename + ":" + std::to_string(lineno) +
               ":1: expected 'map <leaf> -> <leaf> : <word>'");
    dleaves.push_back(parse_leaf(dom_word, g->arity()));
    targets.push_back(parse_leaf(ran_word, g->arity()));
    std::uint32_t label = g->identity_index();
    if (word != "id") {
      std::size_t pos = 0;
      while (pos <= word.size()) {
        auto star = word.find('*', pos);
        std::string name = word.substr(
            pos, star == std::string::npos ? std::string::npos : star - pos);
        auto it = gen_index.find(name);
        if (it == gen_index.end())
          fail(ErrorCode::ParseError,
               filename + ":" + std::to_string(lineno) + ":" +
                   std::to_string(pos + 1) + ": unknown generator '" + name +
                   "'");
        label = g->mul_index(label, it->second);
        if (star == std::string::npos) break;
        pos = star + 1;
      }
    }
    labels.push_back(label);
  }
  if (dleaves.empty())
    fail(ErrorCode::ParseError, filename + ": element has no map lines");
  // Align targets and labels with the sorted domain order.
  std::vector<std::size_t> order(dleaves.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dleaves[a] < dleaves[b];
  });
  std::vector<LeafAddress> sorted_leaves, sorted_targets;
  std::vector<std::uint32_t> sorted_labels;
  for (std::size_t i : order) {
    if (!sorted_leaves.empty() && sorted_leaves.back() == dleaves[i])
      fail(ErrorCode::ParseError,
           filename + ": duplicate domain leaf " + format_leaf(dleaves[i]));
    sorted_leaves.push_back(dleaves[i]);
    sorted_targets.push_back(targets[i]);
    sorted_labels.push_back(labels[i]);
  }
  return SymTreePair(g, CompleteTree(g->arity(), std::move(sorted_leaves)),
                     std::move(sorted_targets), std::move(sorted_labels));
}

std::vector<std::string> format_element_maps(const SymTreePair& e) {
  std::vector<std::string> out;
  out.reserve(e.leaf_count());
  for (std::size_t i = 0; i < e.leaf_count(); ++i)
    out.push_back("map " + format_leaf(e.domain_leaf(i)) + " -> " +
                  format_leaf(e.target(i)) + " : " +
                  e.group()->word(e.label_index(i)));
  return out;
}

std::string format_element_inline(const SymTreePair& e) {
  std::string out;
  for (std::size_t i = 0; i < e.leaf_count(); ++i) {
    if (!out.empty()) out += "; ";
    out += format_leaf(e.domain_leaf(i)) + "->" + format_leaf(e.target(i)) +
           ":" + e.group()->word(e.label_index(i));
  }
  return out;
}

}  // namespace vdh

#include "vdh/local_group.hpp"

#include <deque>
#include <sstream>

namespace vdh {

namespace {

// Full pairwise verification is quadratic in the order; past this size the
// homomorphism and closure properties are verified on element x generator
// products, which implies them by induction on word length.
constexpr std::size_t kPairwiseCheckBound = 4096;

}  // namespace

std::uint32_t LocalGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    fail(ErrorCode::Internal, "permutation not in the group closure");
  return it->second;
}

std::uint32_t LocalGroup::mul_index(std::uint32_t a, std::uint32_t b) const {
  return index_of(elements_[a].compose(elements_[b]));
}

bool LocalGroup::q_is_identity() const {
  if (degree_ != arity_) return false;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] != q_images_[i]) return false;
  return true;
}

std::shared_ptr<const LocalGroup> LocalGroup::image_group() const {
  std::call_once(image_once_, [this] {
    if (q_is_identity()) {
      image_ = shared_from_this();
    } else {
      std::vector<GeneratorSpec> gens;
      gens.reserve(generators_.size());
      for (const auto& g : generators_)
        gens.push_back({g.name, g.q_image, g.q_image});
      image_ = build_group(arity_, arity_, std::move(gens));
    }
    // Deterministic section: first element in enumeration order per image.
    section_.assign(image_->order(), 0);
    std::vector<char> assigned(image_->order(), 0);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
      std::uint32_t img = image_->index_of(q_images_[i]);
      if (!assigned[img]) {
        assigned[img] = 1;
        section_[img] = i;
      }
    }
    for (char a : assigned)
      if (!a) fail(ErrorCode::Internal, "section of q is incomplete");
  });
  return image_;
}

std::uint32_t LocalGroup::section_index(std::uint32_t image_index) const {
  image_group();
  return section_[image_index];
}

std::shared_ptr<const LocalGroup> build_group(int arity, int degree,
                                              std::vector<GeneratorSpec> gens,
                                              const GroupLimits& limits) {
  if (arity < 2) fail(ErrorCode::InvalidArity, "arity must be at least 2");
  if (arity > 10)
    fail(ErrorCode::InvalidArity,
         "arity above 10 is not representable with single-digit addresses");
  if (degree < 1) fail(ErrorCode::ParseError, "degree must be at least 1");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].perm.degree() != degree)
      fail(ErrorCode::ParseError,
           "generator " + gens[i].name + " has degree " +
               std::to_string(gens[i].perm.degree()) + ", expected " +
               std::to_string(degree));
    if (gens[i].q_image.degree() != arity)
      fail(ErrorCode::ParseError,
           "q-image of generator " + gens[i].name + " has degree " +
               std::to_string(gens[i].q_image.degree()) + ", expected " +
               std::to_string(arity));
    for (std::size_t j = 0; j < i; ++j)
      if (gens[j].name == gens[i].name)
        fail(ErrorCode::ParseError, "duplicate generator name " + gens[i].name);
  }

  auto group = std::shared_ptr<LocalGroup>(new LocalGroup());
  group->arity_ = arity;
  group->degree_ = degree;
  group->generators_ = std::move(gens);

  auto& elems = group->elements_;
  auto& qs = group->q_images_;
  auto& words = group->words_;
  auto& index = group->index_;

  elems.push_back(Perm::identity(degree));
  qs.push_back(Perm::identity(arity));
  words.push_back("id");
  index.emplace(elems[0], 0);

  std::deque<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::uint32_t cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : group->generators_) {
      Perm p = elems[cur].compose(g.perm);
      Perm q = qs[cur].compose(g.q_image);
      auto it = index.find(p);
      if (it != index.end()) {
        if (qs[it->second] != q)
          fail(ErrorCode::QConflict,
               "q is not well-defined: words '" + words[it->second] +
                   "' and '" +
                   (words[cur] == "id" ? g.name : words[cur] + "*" + g.name) +
                   "' agree in H but receive different q-images");
        continue;
      }
      if (elems.size() >= limits.max_order)
        fail(ErrorCode::SizeLimit,
             "group closure exceeds the order bound " +
                 std::to_string(limits.max_order));
      auto id = static_cast<std::uint32_t>(elems.size());
      elems.push_back(p);
      qs.push_back(q);
      words.push_back(words[cur] == "id" ? g.name : words[cur] + "*" + g.name);
      index.emplace(elems.back(), id);
      frontier.push_back(id);
    }
  }

  group->generator_indices_.reserve(group->generators_.size());
  for (const auto& g : group->generators_)
    group->generator_indices_.push_back(group->index_of(g.perm));

  group->inverses_.resize(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    auto it = index.find(elems[i].inverse());
    if (it == index.end())
      fail(ErrorCode::Internal, "closure is not inverse-closed");
    group->inverses_[i] = it->second;
    if (qs[it->second] != qs[i].inverse())
      fail(ErrorCode::QConflict, "q does not respect inverses");
  }

  // Verify closure and that q is a homomorphism.
  if (elems.size() <= kPairwiseCheckBound) {
    for (std::uint32_t a = 0; a < elems.size(); ++a)
      for (std::uint32_t b = 0; b < elems.size(); ++b) {
        auto it = index.find(elems[a].compose(elems[b]));
        if (it == index.end())
          fail(ErrorCode::Internal, "closure is not closed under products");
        if (qs[it->second] != qs[a].compose(qs[b]))
          fail(ErrorCode::QConflict, "q is not a homomorphism on the closure");
      }
  } else {
    for (std::uint32_t a = 0; a < elems.size(); ++a)
      for (const auto& g : group->generators_) {
        std::uint32_t gi = group->index_of(g.perm);
        for (auto [x, y] : {std::pair{a, gi}, std::pair{gi, a}}) {
          auto it = index.find(elems[x].compose(elems[y]));
          if (it == index.end())
            fail(ErrorCode::Internal, "closure is not closed under products");
          if (qs[it->second] != qs[x].compose(qs[y]))
            fail(ErrorCode::QConflict, "q is not a homomorphism on the closure");
        }
      }
  }

  return group;
}

LocalElement identity(const std::shared_ptr<const LocalGroup>& g) {
  return {g, g->identity_index()};
}

LocalElement mul(const LocalElement& a, const LocalElement& b) {
  if (a.group != b.group)
    fail(ErrorCode::GroupMismatch, "elements of different local groups");
  return {a.group, a.group->mul_index(a.index, b.index)};
}

LocalElement inv(const LocalElement& a) {
  return {a.group, a.group->inverse_index(a.index)};
}

Perm q_image(const LocalElement& a) { return a.group->q_perm(a.index); }

std::vector<LocalElement> elements(const std::shared_ptr<const LocalGroup>& g) {
  std::vector<LocalElement> out;
  out.reserve(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) out.push_back({g, i});
  return out;
}

std::shared_ptr<const LocalGroup> parse_group_text(const std::string& text,
                                                   const std::string& filename,
                                                   const GroupLimits& limits) {
  std::istringstream in(text);
  std::string line;
  int arity = 0;
  int degree = 0;
  bool have_header = false;
  std::vector<GeneratorSpec> gens;
  std::size_t lineno = 0;
  auto err = [&](const std::string& msg, std::size_t col) {
    fail(ErrorCode::ParseError, filename + ":" + std::to_string(lineno) + ":" +
                                    std::to_string(col) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (!have_header) {
      if (tok != "d") err("expected header line 'd <d> N <N>'", 1);
      std::string nkey;
      if (!(ls >> arity >> nkey >> degree) || nkey != "N")
        err("expected header line 'd <d> N <N>'", 1);
      have_header = true;
      continue;
    }
    if (tok != "gen") err("expected 'gen <name> = <cycles> ; q = <cycles>'", 1);
    std::string rest;
    std::getline(ls, rest);
    auto eq = rest.find('=');
    if (eq == std::string::npos) err("missing '=' in generator line", 1);
    std::string name = rest.substr(0, eq);
    auto ws = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    name = ws(name);
    if (name.empty() || name == "id") err("invalid generator name", 1);
    std::string tail = rest.substr(eq + 1);
    auto semi = tail.find(';');
    if (semi == std::string::npos) err("missing ';' before q part", 1);
    std::string perm_text = ws(tail.substr(0, semi));
    std::string qpart = ws(tail.substr(semi + 1));
    auto qeq = qpart.find('=');
    if (qpart.rfind("q", 0) != 0 || qeq == std::string::npos)
      err("expected 'q = <cycles>'", 1);
    std::string q_text = ws(qpart.substr(qeq + 1));
    try {
      gens.push_back(
          {name, parse_cycles(perm_text, degree), parse_cycles(q_text, arity)});
    } catch (const Error& e) {
      err(e.what(), 1);
    }
  }
  if (!have_header)
    fail(ErrorCode::ParseError, filename + ":1:1: missing 'd <d> N <N>' header");
  return build_group(arity, degree, std::move(gens), limits);
}

std::string format_group_text(const LocalGroup& g) {
  std::ostringstream out;
  out << "d " << g.arity() << " N " << g.degree() << "\n";
  for (const auto& gen : g.generators())
    out << "gen " << gen.name << " = " << format_cycles(gen.perm)
        << " ; q = " << format_cycles(gen.q_image) << "\n";
  return out.str();
}

}  // namespace vdh

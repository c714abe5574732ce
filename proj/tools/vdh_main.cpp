// Command line front end for the labeled tree-pair calculus: element
// algebra, property campaigns, Stein-Farley computations and homology.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdh/campaigns.hpp"
#include "vdh/element.hpp"
#include "vdh/homology.hpp"
#include "vdh/stein_farley.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace vdh;

namespace {

struct Options {
  std::string group_file;
  std::uint64_t seed = 0;
  std::size_t depth_limit = kDefaultDepthLimit;
  std::size_t ball_limit = 200000;
  std::size_t leaf_bound = 9;
  std::string out_file;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DepthLimit:
    case ErrorCode::SizeLimit:
    case ErrorCode::BallLimit:
    case ErrorCode::BoundExceeded:
      return 3;
    case ErrorCode::Internal:
      return 1;
    default:
      return 2;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.out_file, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write file: " + opt.out_file);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// Groups are cached per canonical path so elements referencing the same
// file share one instance.
std::map<std::string, std::shared_ptr<const LocalGroup>>& group_cache() {
  static std::map<std::string, std::shared_ptr<const LocalGroup>> cache;
  return cache;
}

std::shared_ptr<const LocalGroup> load_group(const std::string& path) {
  std::string key = fs::weakly_canonical(fs::path(path)).string();
  auto& cache = group_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = parse_group_text(read_file(path), path);
  cache.emplace(key, g);
  return g;
}

struct LoadedElement {
  SymTreePair element;
  std::string group_path;  // as resolved
};

LoadedElement load_element(const std::string& path, const Options& opt) {
  std::istringstream in(read_file(path));
  std::string line;
  std::string group_path = opt.group_file;
  std::vector<std::string> map_lines;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "group") {
      std::string ref;
      ls >> ref;
      if (ref.empty())
        fail(ErrorCode::ParseError,
             path + ":" + std::to_string(lineno) + ":1: missing group path");
      if (group_path.empty()) {
        fs::path p(ref);
        group_path =
            p.is_absolute() ? p.string() : (fs::path(path).parent_path() / p)
                                               .string();
      }
    } else if (tok == "map") {
      std::string rest;
      std::getline(ls, rest);
      map_lines.push_back(rest);
    } else {
      fail(ErrorCode::ParseError, path + ":" + std::to_string(lineno) +
                                      ":1: expected 'group' or 'map' line");
    }
  }
  if (group_path.empty())
    fail(ErrorCode::ParseError,
         path + ": no group reference (add a 'group <file>' line or --group)");
  auto g = load_group(group_path);
  return {parse_element_maps(map_lines, g, path), group_path};
}

std::string element_text(const SymTreePair& e, const std::string& group_path) {
  std::string out = "group " + group_path + "\n";
  for (const auto& line : format_element_maps(e)) out += line + "\n";
  return out;
}

// Re-express an element over another group instance with the same
// definition. Enumeration order is deterministic, so equal definitions give
// aligned closure tables and label indices carry over unchanged.
SymTreePair rebind(const SymTreePair& e,
                   const std::shared_ptr<const LocalGroup>& g) {
  if (e.group() == g) return e;
  if (format_group_text(*e.group()) != format_group_text(*g))
    fail(ErrorCode::GroupMismatch,
         "element group definition does not match the expected group");
  std::vector<LeafAddress> targets;
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < e.leaf_count(); ++i) {
    targets.push_back(e.target(i));
    labels.push_back(e.label_index(i));
  }
  return SymTreePair(g, e.domain(), std::move(targets), std::move(labels));
}

json profile_json(const HomologyProfile& profile) {
  json j;
  j["betti"] = profile.betti;
  json torsion = json::array();
  for (const auto& degree : profile.torsion) {
    json list = json::array();
    for (const auto& t : degree) list.push_back(t.str());
    torsion.push_back(list);
  }
  j["torsion"] = torsion;
  j["euler_characteristic"] = profile.euler;
  return j;
}

void emit_report(const Options& opt, json j, const Timer& timer) {
  j["wall_time_ms"] = timer.ms();
  write_output(opt, j.dump(2));
}

int run(int argc, char** argv) {
  CLI::App app{
      "vdh: exact calculus for labeled tree-pair groups V_d(H) and their "
      "Stein-Farley complexes"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_group = true) {
    if (with_group) cmd->add_option("--group", opt.group_file, "group definition file");
    cmd->add_option("--seed", opt.seed, "seed for randomized campaigns");
    cmd->add_option("--depth-limit", opt.depth_limit, "tree depth limit");
    cmd->add_option("--ball-limit", opt.ball_limit, "BFS ball size limit");
    cmd->add_option("--leaf-bound", opt.leaf_bound, "descending link leaf bound");
    cmd->add_option("--out", opt.out_file, "output file (default: stdout)");
  };

  std::vector<std::string> files;
  std::string point_text, tree_text, tree2_text;
  std::size_t max_height = 0;

  auto* c_compose = app.add_subcommand("compose", "print g∘f for element files g f");
  c_compose->add_option("files", files)->expected(2);
  add_common(c_compose);

  auto* c_invert = app.add_subcommand("invert", "invert an element");
  c_invert->add_option("files", files)->expected(1);
  add_common(c_invert);

  auto* c_reduce = app.add_subcommand("reduce", "canonical form of an element");
  c_reduce->add_option("files", files)->expected(1);
  add_common(c_reduce);

  auto* c_equals = app.add_subcommand("equals", "compare two elements");
  c_equals->add_option("files", files)->expected(2);
  add_common(c_equals);

  auto* c_act = app.add_subcommand("act", "apply an element to a point");
  c_act->add_option("file", files)->expected(1);
  c_act->add_option("point", point_text, "point as prefix(period)");
  add_common(c_act);

  auto* c_pi = app.add_subcommand("pi", "image under the label-forgetting map");
  c_pi->add_option("files", files)->expected(1);
  add_common(c_pi);

  auto* c_section = app.add_subcommand(
      "section", "lift an image-group element through the section of q");
  c_section->add_option("files", files)->expected(1);
  add_common(c_section);

  auto* c_retract = app.add_subcommand("retract",
                                       "label word of the leftmost leaf");
  c_retract->add_option("files", files)->expected(1);
  add_common(c_retract);

  auto* c_axioms = app.add_subcommand("axioms", "run the property campaigns");
  add_common(c_axioms);

  auto* c_generate = app.add_subcommand(
      "generate-check", "BFS generation experiment over iota(H) and the "
                        "unlabeled generators");
  add_common(c_generate);

  auto* c_dlk = app.add_subcommand("dlk",
                                   "descending link report for [T, id]");
  c_dlk->add_option("tree", tree_text, "tree as leaf words, e.g. \"00 01 1\"");
  add_common(c_dlk);

  auto* c_interval = app.add_subcommand("interval",
                                        "interval report for [T1,id] <= [T2,id]");
  c_interval->add_option("tree1", tree_text);
  c_interval->add_option("tree2", tree2_text);
  add_common(c_interval);

  auto* c_stab = app.add_subcommand("stabilizer",
                                    "stabilizer order of [T, id]");
  c_stab->add_option("tree", tree_text);
  add_common(c_stab);

  auto* c_orbits = app.add_subcommand("orbits", "orbit census per height");
  c_orbits->add_option("height", max_height, "maximum height");
  add_common(c_orbits);

  auto* c_hom = app.add_subcommand("homology",
                                   "reduced homology of a complex file");
  c_hom->add_option("file", files)->expected(1);
  add_common(c_hom, /*with_group=*/false);

  CLI11_PARSE(app, argc, argv);
  Timer timer;

  if (*c_compose) {
    LoadedElement g = load_element(files[0], opt);
    LoadedElement f = load_element(files[1], opt);
    SymTreePair out = compose(g.element, f.element, opt.depth_limit);
    write_output(opt, element_text(out, g.group_path));
  } else if (*c_invert) {
    LoadedElement e = load_element(files[0], opt);
    write_output(opt, element_text(inverse(e.element), e.group_path));
  } else if (*c_reduce) {
    LoadedElement e = load_element(files[0], opt);
    write_output(opt, element_text(reduce(e.element), e.group_path));
  } else if (*c_equals) {
    LoadedElement a = load_element(files[0], opt);
    LoadedElement b = load_element(files[1], opt);
    write_output(opt, equals(a.element, b.element) ? "equal" : "not-equal");
  } else if (*c_act) {
    LoadedElement e = load_element(files[0], opt);
    CantorPoint c = parse_point(point_text, e.element.group()->arity());
    write_output(opt, format_point(act(e.element, c)));
  } else if (*c_pi) {
    LoadedElement e = load_element(files[0], opt);
    SymTreePair image = pi(e.element);
    // The image element references a derived group file that is written
    // alongside the base group definition.
    std::string image_path = e.group_path + ".image";
    std::ofstream gout(image_path, std::ios::binary);
    if (!gout)
      fail(ErrorCode::ParseError, "cannot write image group file: " + image_path);
    gout << format_group_text(*image.group());
    gout.close();
    write_output(opt, element_text(image, image_path));
  } else if (*c_section) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError,
           "section requires --group with the base group file");
    auto base = load_group(opt.group_file);
    Options nested = opt;
    nested.group_file.clear();
    LoadedElement v = load_element(files[0], nested);
    SymTreePair over_image = rebind(v.element, base->image_group());
    write_output(opt,
                 element_text(pi_section(base, over_image), opt.group_file));
  } else if (*c_retract) {
    LoadedElement e = load_element(files[0], opt);
    LocalElement r = retract(e.element);
    write_output(opt, e.element.group()->word(r.index));
  } else if (*c_axioms) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "axioms requires --group");
    auto g = load_group(opt.group_file);
    CampaignConfig cfg;
    cfg.seed = opt.seed;
    auto results = run_axioms_campaign(g, cfg);
    json j;
    j["group"] = opt.group_file;
    j["seed"] = opt.seed;
    json props = json::array();
    bool all = true;
    for (const auto& r : results) {
      json p;
      p["name"] = r.name;
      p["samples"] = r.samples;
      p["pass"] = r.pass;
      if (!r.pass) p["counterexample"] = r.counterexample;
      props.push_back(p);
      all = all && r.pass;
    }
    j["properties"] = props;
    j["all_pass"] = all;
    emit_report(opt, j, timer);
    if (!all) return 1;
  } else if (*c_generate) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "generate-check requires --group");
    auto g = load_group(opt.group_file);
    auto gens = generator_pool(g);
    auto one_caret = enumerate_canonical_elements(g, 1);
    std::vector<SymTreePair> two_caret;
    bool include_two = true;
    {
      // Only enumerate the two-caret sphere when it stays desk-sized.
      auto trees = enumerate_trees(g->arity(), 2);
      double count = 0;
      for (const auto& dom : trees)
        for (const auto& ran : trees) {
          (void)ran;
          double fact = 1;
          for (std::size_t i = 2; i <= dom.leaf_count(); ++i)
            fact *= static_cast<double>(i);
          double labels = 1;
          for (std::size_t i = 0; i < dom.leaf_count(); ++i)
            labels *= static_cast<double>(g->order());
          count += fact * labels;
        }
      include_two = count <= 20000;
      if (include_two) two_caret = enumerate_canonical_elements(g, 2);
    }
    const auto& targets = include_two ? two_caret : one_caret;

    std::map<std::string, std::size_t> target_index;
    for (std::size_t i = 0; i < targets.size(); ++i)
      target_index.emplace(targets[i].key(), i);
    std::vector<long long> reached(targets.size(), -1);

    BallLimits limits;
    limits.max_elements = opt.ball_limit;
    limits.depth_limit = opt.depth_limit;
    std::vector<std::size_t> sizes;
    bool limited = false;
    std::size_t radius = 0;
    std::vector<SymTreePair> ball{identity_element(g)};
    std::map<std::string, bool> seen{{ball[0].key(), true}};
    {
      auto it = target_index.find(ball[0].key());
      if (it != target_index.end()) reached[it->second] = 0;
    }
    sizes.push_back(1);
    std::size_t frontier_begin = 0;
    auto all_reached = [&] {
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (targets[i].domain().carets() <= 1 && reached[i] < 0) return false;
      return true;
    };
    // Expand radius by radius until the one-caret targets are covered or
    // the ball limit stops the search; radius 8 is a hard cap.
    while (!all_reached() && radius < 8 && !limited) {
      ++radius;
      std::size_t frontier_end = ball.size();
      try {
        for (std::size_t i = frontier_begin; i < frontier_end; ++i)
          for (const auto& x : gens) {
            SymTreePair p = compose(ball[i], x, limits.depth_limit);
            std::string k = p.key();
            if (seen.contains(k)) continue;
            if (ball.size() >= limits.max_elements)
              fail(ErrorCode::BallLimit, "ball limit reached");
            seen.emplace(k, true);
            auto it = target_index.find(k);
            if (it != target_index.end())
              reached[it->second] = static_cast<long long>(radius);
            ball.push_back(std::move(p));
          }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BallLimit) throw;
        limited = true;
      }
      frontier_begin = frontier_end;
      sizes.push_back(ball.size());
    }

    json j;
    j["group"] = opt.group_file;
    j["generator_count"] = gens.size();
    j["ball_limit"] = opt.ball_limit;
    j["ball_limited"] = limited;
    j["ball_sizes"] = sizes;
    json tj = json::array();
    bool one_ok = true;
    long long max_radius = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      json t;
      t["element"] = format_element_inline(targets[i]);
      t["carets"] = targets[i].domain().carets();
      if (reached[i] >= 0)
        t["reached_radius"] = reached[i];
      else
        t["reached_radius"] = nullptr;
      tj.push_back(t);
      if (targets[i].domain().carets() <= 1) {
        if (reached[i] < 0) one_ok = false;
        max_radius = std::max(max_radius, reached[i]);
      }
    }
    j["targets"] = tj;
    j["one_caret_targets_reached"] = one_ok;
    j["max_radius_for_one_caret"] = max_radius;
    j["includes_two_caret_targets"] = include_two;
    emit_report(opt, j, timer);
    if (!one_ok) return 1;
  } else if (*c_dlk) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "dlk requires --group");
    auto g = load_group(opt.group_file);
    CompleteTree t = parse_tree(tree_text, g->arity(), opt.depth_limit);
    DescendingLink link = descending_link(t, g, opt.leaf_bound);
    CompleteJoinReport join = complete_join_check(link.link, link.pi,
                                                  link.target);
    HomologyProfile profile = reduced_homology(link.link);
    HomologyProfile target_profile = reduced_homology(link.target);
    json j;
    j["arity"] = g->arity();
    j["leaves"] = t.leaf_count();
    j["local_group_order"] = g->order();
    j["link_vertices"] = link.link.simplex_count(0);
    json counts = json::array();
    for (int dim = 0; dim <= link.link.dimension(); ++dim)
      counts.push_back(link.link.simplex_count(dim));
    j["simplex_counts"] = counts;
    j["link_homology"] = profile_json(profile);
    j["target_vertices"] = link.target.simplex_count(0);
    j["target_homology"] = profile_json(target_profile);
    j["complete_join"] = join.ok;
    if (!join.ok) j["complete_join_violation"] = join.violation;
    emit_report(opt, j, timer);
  } else if (*c_interval) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "interval requires --group");
    auto g = load_group(opt.group_file);
    PosetVertex a(parse_tree(tree_text, g->arity(), opt.depth_limit),
                  identity_element(g));
    PosetVertex b(parse_tree(tree2_text, g->arity(), opt.depth_limit),
                  identity_element(g));
    IntervalResult res = interval(a, b);
    json j;
    j["gap"] = res.gap;
    j["vertex_count"] = res.vertices.size();
    j["boolean_lattice"] = res.boolean_lattice;
    emit_report(opt, j, timer);
    if (!res.boolean_lattice) return 1;
  } else if (*c_stab) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "stabilizer requires --group");
    auto g = load_group(opt.group_file);
    CompleteTree t = parse_tree(tree_text, g->arity(), opt.depth_limit);
    StabilizerReport rep = vertex_stabilizer_order(t, g);
    json j;
    j["leaves"] = t.leaf_count();
    j["group_order"] = g->order();
    j["predicted"] = rep.predicted;
    j["counted"] = rep.counted;
    j["all_fix"] = rep.all_fix;
    j["verified"] = rep.counted == rep.predicted && rep.all_fix;
    emit_report(opt, j, timer);
    if (rep.counted != rep.predicted || !rep.all_fix) return 1;
  } else if (*c_orbits) {
    if (opt.group_file.empty())
      fail(ErrorCode::ParseError, "orbits requires --group");
    auto g = load_group(opt.group_file);
    json per_height = json::array();
    bool all_one = true;
    for (std::size_t k = 0; k <= max_height; ++k) {
      OrbitCensus census = orbit_census(k, g);
      json c;
      c["height"] = census.height;
      c["trees"] = census.tree_count;
      c["orbits"] = census.orbit_count;
      c["witnesses_verified"] = census.witnesses_verified;
      per_height.push_back(c);
      all_one = all_one && census.orbit_count == 1 && census.witnesses_verified;
    }
    json j;
    j["max_height"] = max_height;
    j["per_height"] = per_height;
    j["transitive_per_height"] = all_one;
    emit_report(opt, j, timer);
    if (!all_one) return 1;
  } else if (*c_hom) {
    SimplicialComplex k = parse_complex(read_file(files[0]), files[0]);
    HomologyProfile profile = reduced_homology(k);
    json j = profile_json(profile);
    json counts = json::array();
    for (int dim = 0; dim <= k.dimension(); ++dim)
      counts.push_back(k.simplex_count(dim));
    j["simplex_counts"] = counts;
    emit_report(opt, j, timer);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "doctest.h"
#include "vdh/local_group.hpp"

using namespace vdh;

namespace {

std::shared_ptr<const LocalGroup> trivial_group(int d) {
  return build_group(d, 1, {});
}

std::shared_ptr<const LocalGroup> z2_faithful(int d) {
  return build_group(d, 2,
                     {{"a", parse_cycles("(0 1)", 2), parse_cycles("(0 1)", d)}});
}

std::shared_ptr<const LocalGroup> z2_kernel() {
  return build_group(2, 2, {{"a", parse_cycles("(0 1)", 2), Perm::identity(2)}});
}

std::shared_ptr<const LocalGroup> sym3(int d) {
  // q is the natural map for d = 3 and the sign map for d = 2.
  Perm qs = d == 3 ? parse_cycles("(0 1)", 3) : parse_cycles("(0 1)", 2);
  Perm qc = d == 3 ? parse_cycles("(0 1 2)", 3) : Perm::identity(2);
  return build_group(d, 3,
                     {{"s", parse_cycles("(0 1)", 3), qs},
                      {"c", parse_cycles("(0 1 2)", 3), qc}});
}

}  // namespace

TEST_SUITE_BEGIN("local_group");

TEST_CASE("trivial group") {
  auto g = trivial_group(2);
  CHECK(g->order() == 1);
  CHECK(q_image(identity(g)).is_identity());
}

TEST_CASE("Z/2 closures") {
  auto g = z2_faithful(2);
  CHECK(g->order() == 2);
  CHECK(g->word(1) == "a");

  auto k = z2_kernel();
  CHECK(k->order() == 2);
  CHECK(q_image({k, 1}).is_identity());  // q need not be injective
}

TEST_CASE("group arithmetic") {
  auto g = z2_faithful(2);
  LocalElement a{g, 1};
  CHECK(mul(a, inv(a)) == identity(g));
  CHECK(inv(identity(g)) == identity(g));
  // q is a homomorphism on all pairs.
  for (auto x : elements(g))
    for (auto y : elements(g))
      CHECK(q_image(mul(x, y)) == q_image(x).compose(q_image(y)));
  auto h = sym3(3);
  CHECK(h->order() == 6);
  for (auto x : elements(h))
    for (auto y : elements(h))
      CHECK(q_image(mul(x, y)) == q_image(x).compose(q_image(y)));
  CHECK_THROWS_AS(mul(identity(g), identity(h)), Error);
}

TEST_CASE("image group") {
  CHECK(trivial_group(2)->image_group()->order() == 1);
  auto g = z2_faithful(2);
  auto img = g->image_group();
  CHECK(img->order() == 2);
  CHECK(img->q_is_identity());
  CHECK(img->image_group() == img);  // fixed point
  CHECK(z2_kernel()->image_group()->order() == 1);
  CHECK(sym3(2)->image_group()->order() == 2);  // sign image
  CHECK(sym3(3)->image_group()->order() == 6);
}

TEST_CASE("section of q") {
  auto g = z2_kernel();
  auto img = g->image_group();
  CHECK(g->section_index(img->identity_index()) == g->identity_index());

  auto h = sym3(2);
  auto himg = h->image_group();
  for (std::uint32_t i = 0; i < himg->order(); ++i) {
    std::uint32_t lift = h->section_index(i);
    CHECK(h->q_perm(lift) == himg->element_perm(i));
  }
}

TEST_CASE("deterministic enumeration") {
  auto g1 = sym3(3);
  auto g2 = sym3(3);
  REQUIRE(g1->order() == g2->order());
  for (std::uint32_t i = 0; i < g1->order(); ++i) {
    CHECK(g1->element_perm(i) == g2->element_perm(i));
    CHECK(g1->word(i) == g2->word(i));
  }
}

TEST_CASE("q conflict detection") {
  // Two generators equal in H with different q-images.
  CHECK_THROWS_AS(
      build_group(2, 2,
                  {{"a", parse_cycles("(0 1)", 2), parse_cycles("(0 1)", 2)},
                   {"b", parse_cycles("(0 1)", 2), Perm::identity(2)}}),
      Error);
  // a*a = id in H but q(a)^2 = (0 1 2)^2 != id.
  CHECK_THROWS_AS(
      build_group(3, 2,
                  {{"a", parse_cycles("(0 1)", 2), parse_cycles("(0 1 2)", 3)}}),
      Error);
}

TEST_CASE("size limit") {
  GroupLimits limits;
  limits.max_order = 3;
  CHECK_THROWS_AS(build_group(3, 3,
                              {{"s", parse_cycles("(0 1)", 3),
                                parse_cycles("(0 1)", 3)},
                               {"c", parse_cycles("(0 1 2)", 3),
                                parse_cycles("(0 1 2)", 3)}},
                              limits),
                  Error);
}

TEST_CASE("group file parsing") {
  auto g = parse_group_text("d 2 N 2\ngen a = (0 1) ; q = (0 1)\n");
  CHECK(g->order() == 2);
  CHECK(g->arity() == 2);
  CHECK(g->degree() == 2);

  auto t = parse_group_text("d 3 N 1\n");
  CHECK(t->order() == 1);

  // Round trip through the text form.
  auto g2 = parse_group_text(format_group_text(*g));
  CHECK(g2->order() == g->order());
  CHECK(g2->element_perm(1) == g->element_perm(1));

  CHECK_THROWS_AS(parse_group_text("gen a = (0 1) ; q = (0 1)\n"), Error);
  CHECK_THROWS_AS(parse_group_text("d 2 N 2\ngen a = (0 3) ; q = ()\n"), Error);
  CHECK_THROWS_AS(parse_group_text("d 2 N 2\nfoo\n"), Error);
}

TEST_SUITE_END();

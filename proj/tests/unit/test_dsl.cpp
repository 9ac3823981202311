#include "dweb/dsl.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace dweb;

namespace {

DslError::Kind error_kind(const std::string &text) {
  try {
    layout(parse(text));
  } catch (const DslError &e) {
    return e.kind;
  }
  FAIL("no DslError for: " << text);
  return DslError::Kind::syntax;
}

}  // namespace

TEST_CASE("render round trip over the catalog") {
  for (const auto &n : builtin_names()) {
    INFO(n);
    const SliceProgram p = parse(builtin(n));
    CHECK(same_program(parse(render(p)), p));
  }
}

TEST_CASE("every builtin lays out") {
  for (const auto &n : builtin_names()) {
    INFO(n);
    CHECK_NOTHROW(layout(parse(builtin(n))));
  }
}

TEST_CASE("syntax variants") {
  const std::string a = "cup_v\ncap_v\n";
  CHECK(same_program(parse(a), parse("row cup_v; row cap_v")));
  CHECK(same_program(parse(a), parse("# circle\ncup_v   # open\n\ncap_v")));
  const Web w = layout_web(parse(a));
  CHECK(w.edges.size() == 1);
  CHECK(w.edges[0].is_loop());
}

TEST_CASE("tile shapes") {
  const Tile y = make_tile("Y(v | e+ o-)");
  CHECK(y.kind == TileKind::vertex);
  CHECK(y.bottom == std::vector<Strand>{Strand::v});
  CHECK(y.top == std::vector<Strand>{Strand::e_up, Strand::o_down});
  CHECK(make_tile("square3").variant == 3);
  CHECK(make_tile("mover(e+ v | v e+)").kind == TileKind::mixed_over);
  CHECK(render_tile(make_tile("cup(o+ o-)")) == "cup(o+ o-)");
}

TEST_CASE("crossing diagrams") {
  const Diagram d = test::diagram_of("trefoil");
  CHECK(d.crossings.size() == 3);
  CHECK(d.web.count_vertices(VertexKind::crossing) == 3);
  CHECK_THROWS_AS(layout_web(parse(builtin("trefoil"))), std::exception);
}

TEST_CASE("errors carry kind and location") {
  CHECK(error_kind("cup_v\nfoo\ncap_v") == DslError::Kind::syntax);
  CHECK(error_kind("cup_v\ncap(e+ e-)") == DslError::Kind::type_mismatch);
  CHECK(error_kind("cup_v") == DslError::Kind::open_boundary);
  CHECK(error_kind("cup(e+ e+)\ncap_v") != DslError::Kind::open_boundary);
  CHECK(error_kind("Y(v | e+") == DslError::Kind::syntax);
  try {
    parse("cup_v\n  bogus\ncap_v");
    FAIL("expected an error");
  } catch (const DslError &e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
}

TEST_CASE("builtin lookup") {
  CHECK(resolve_source("builtin:circle_v") == builtin("circle_v"));
  CHECK(resolve_source("cup_v\ncap_v") == "cup_v\ncap_v");
  try {
    builtin("no_such_web");
    FAIL("expected an error");
  } catch (const DslError &e) {
    CHECK(e.kind == DslError::Kind::unknown_name);
  }
}

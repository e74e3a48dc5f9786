#include "conecalc/fixtures.hpp"

namespace conecalc {
namespace {

Fixture section_fixture(const std::string& name, const BaseSpace& b,
                        const std::vector<int>& twists,
                        const std::vector<std::string>& section) {
  return Fixture{name, make_embedded(b),
                 section_of_bundle(twists, parse_polys(b.ring, section))};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fat-point", "conic", "twisted-cubic", "double-line", "p2-smooth"};
  return names;
}

Fixture fixture(const std::string& name) {
  if (name == "fat-point") {
    // First infinitesimal neighbourhood of the origin in the plane, cut out
    // by the three quadric monomials.
    BaseSpace b = make_base({"x", "y"}, {"x^2", "x*y", "y^2"});
    return section_fixture(name, b, {2, 2, 2}, {"x^2", "x*y", "y^2"});
  }
  if (name == "conic") {
    BaseSpace b = make_base({"x0", "x1", "x2"}, {"x0*x2 - x1^2"}, true);
    return section_fixture(name, b, {2}, {"x0*x2 - x1^2"});
  }
  if (name == "twisted-cubic") {
    BaseSpace b = make_base(
        {"x0", "x1", "x2", "x3"},
        {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, true);
    return section_fixture(name, b, {2, 2, 2},
                           {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  }
  if (name == "double-line") {
    BaseSpace b = make_base({"x0", "x1", "x2"}, {"x0^2"}, true);
    return section_fixture(name, b, {2}, {"x0^2"});
  }
  if (name == "p2-smooth") {
    BaseSpace b = make_base({"x0", "x1", "x2"}, {}, true);
    return Fixture{name, make_embedded(b), smooth_identity()};
  }
  throw input_error("unknown fixture: " + name);
}

}  // namespace conecalc

#include <doctest.h>

#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "rdtsp/exact.hpp"
#include "rdtsp/generators.hpp"
#include "rdtsp/policies.hpp"
#include "rdtsp/render.hpp"

using namespace rdtsp;

namespace {

struct Element {
    std::string name;
    std::string attrs;
};

// Minimal well-formedness check: balanced tags, quoted attributes. Returns
// every opened element in document order; fails the test on malformed input.
std::vector<Element> parse_xml(const std::string& s) {
    std::vector<Element> out;
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = s.find('<', i)) != std::string::npos) {
        const std::size_t end = s.find('>', i);
        REQUIRE(end != std::string::npos);
        std::string tag = s.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.starts_with("?") || tag.starts_with("!")) continue;
        if (tag.starts_with("/")) {
            REQUIRE(!stack.empty());
            CHECK(stack.back() == tag.substr(1));
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.ends_with("/");
        if (self_closing) tag.pop_back();
        const std::size_t sp = tag.find_first_of(" \n\t");
        Element e{tag.substr(0, sp), sp == std::string::npos ? "" : tag.substr(sp)};
        CHECK(std::count(e.attrs.begin(), e.attrs.end(), '"') % 2 == 0);
        out.push_back(e);
        if (!self_closing) stack.push_back(e.name);
    }
    CHECK(stack.empty());
    return out;
}

std::size_t polyline_points(const Element& e) {
    const auto a = e.attrs.find("points=\"");
    REQUIRE(a != std::string::npos);
    const auto b = e.attrs.find('"', a + 8);
    std::istringstream in(e.attrs.substr(a + 8, b - a - 8));
    std::string pair;
    std::size_t count = 0;
    while (in >> pair) ++count;
    return count;
}

}  // namespace

TEST_CASE("default prefix") {
    CHECK(default_prefix(800) == 100);
    CHECK(default_prefix(100) == 13);
    CHECK(default_prefix(1) == 1);
}

TEST_CASE("prefix 0 draws dots and the start only") {
    const auto inst = generate_scenario({ScenarioKind::RandomCities, 50, 1});
    RenderSpec spec;
    spec.instance = &inst;
    spec.tour = nn(inst).order;
    spec.prefix = 0;
    const auto els = parse_xml(render_svg(spec));
    CHECK(std::count_if(els.begin(), els.end(), [](auto& e) { return e.name == "polyline"; }) == 0);
    CHECK(std::count_if(els.begin(), els.end(), [](auto& e) { return e.name == "circle"; }) == 50);
    CHECK(std::count_if(els.begin(), els.end(), [](auto& e) { return e.name == "rect"; }) >= 1);
}

TEST_CASE("default prefix on n=800 draws one polyline through 100 rewards") {
    const auto inst = generate_scenario({ScenarioKind::Circles, 800, 0});
    RenderSpec spec;
    spec.instance = &inst;
    spec.tour = nn(inst).order;
    const auto els = parse_xml(render_svg(spec));
    REQUIRE(els.front().name == "svg");
    std::vector<Element> lines;
    for (const auto& e : els)
        if (e.name == "polyline") lines.push_back(e);
    REQUIRE(lines.size() == 1);
    CHECK(polyline_points(lines[0]) == 101);
}

TEST_CASE("explicit prefixes and the star layout") {
    RngStream rng(2);
    const auto inst = oracle::random_euclidean(20, 0.9, rng);
    for (std::size_t p : {1, 5, 20}) {
        RenderSpec spec;
        spec.instance = &inst;
        spec.tour = nn(inst).order;
        spec.prefix = p;
        const auto els = parse_xml(render_svg(spec));
        for (const auto& e : els)
            if (e.name == "polyline") CHECK(polyline_points(e) == p + 1);
    }
    RenderSpec bad;
    bad.instance = &inst;
    bad.tour = {1, 2};
    bad.prefix = 3;
    CHECK_THROWS_AS(render_svg(bad), Error);

    const auto star = DStarInstance::make({{1.0}, {2.0}, {3.0}}).to_instance(0.5);
    RenderSpec s;
    s.instance = &star;
    s.tour = {1, 2, 3};
    CHECK_THROWS_AS(render_svg(s), Error);
    s.layout = Layout::Star;
    const std::string svg = render_svg(s);
    parse_xml(svg);
    CHECK(svg.find("not to scale") != std::string::npos);
    CHECK(star_layout(3).size() == 4);
}

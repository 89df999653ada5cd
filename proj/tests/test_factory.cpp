#include <doctest.h>

#include <set>

#include "o1p/factory.hpp"

using namespace o1p;

TEST_CASE("random_instance is seed-deterministic and honors its flags") {
    GeneratorConfig cfg;
    cfg.n = 20;
    cfg.seed = 1;
    cfg.crossings_min = 2;
    cfg.crossings_max = 3;
    OuterDrawing a = random_instance(cfg);
    OuterDrawing b = random_instance(cfg);
    CHECK(a.edges == b.edges);
    CHECK(validate_outer1planarity(a).ok);
    CHECK(degree_stats(a).max_degree <= 4);
    auto theta = crossing_distance(a);
    CHECK((!theta || *theta >= 3));
    size_t crossings = compute_crossings(a).size();
    CHECK(crossings >= 2);
    CHECK(crossings <= 3);
    CHECK(is_two_connected(a));  // the boundary cycle stays in

    GeneratorConfig no_cross;
    no_cross.n = 5;
    no_cross.seed = 7;
    OuterDrawing c = random_instance(no_cross);
    CHECK(compute_crossings(c).empty());
    CHECK(degree_stats(c).min_degree >= 2);
}

TEST_CASE("canonical_form identifies dihedral relabelings") {
    std::vector<Edge> c5;
    for (int v = 0; v < 5; ++v) c5.emplace_back(v, (v + 1) % 5);
    OuterDrawing a = build_drawing(5, c5);
    std::vector<Edge> rotated;
    for (int v = 0; v < 5; ++v) rotated.emplace_back((v + 2) % 5, (v + 3) % 5);
    OuterDrawing b = build_drawing(5, rotated);
    CHECK(canonical_form(a) == canonical_form(b));

    OuterDrawing diamond = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
    // reflection through the 1-2 axis maps the diamond onto itself relabeled
    OuterDrawing mirrored = build_drawing(4, {{2, 3}, {1, 2}, {0, 1}, {1, 3}, {0, 2}});
    CHECK(canonical_form(diamond) == canonical_form(mirrored));

    OuterDrawing k4 = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    CHECK(canonical_form(diamond) != canonical_form(k4));
}

TEST_CASE("canonical_form separates inequivalent small drawings") {
    // all drawings on 4 vertices: canonical forms collide only inside a
    // dihedral class (checked by explicit relabeling)
    EnumFilters none;
    none.delta_max = 4;
    std::vector<OuterDrawing> reps;
    enumerate_drawings(4, none, [&](const OuterDrawing& d) {
        reps.push_back(d);
        return true;
    });
    std::set<std::string> forms;
    for (const auto& d : reps) CHECK(forms.insert(canonical_form(d)).second);
}

TEST_CASE("enumerate_drawings small counts") {
    EnumFilters delta2;
    delta2.delta_min = 2;
    // n=3: boundary triangle only
    CHECK(count_drawings(3, delta2) == 1);

    EnumFilters audit4;
    audit4.delta_min = 2;
    audit4.two_connected = true;
    audit4.crossings_min = 1;
    // the crossed 4-cycle, the diamond, and K4
    std::vector<std::string> found;
    enumerate_drawings(4, audit4, [&](const OuterDrawing& d) {
        found.push_back(serialize_drawing(d));
        return true;
    });
    CHECK(found.size() == 3);

    CHECK_THROWS_AS(count_drawings(9, delta2), graph_error);
}

TEST_CASE("enumeration counts are stable golden values") {
    EnumFilters all;
    CHECK(count_drawings(3, all) == 4);
    CHECK(count_drawings(4, all) == 19);
    // frozen by the first verified run; guards against regressions in the
    // crossing logic or the canonical dedupe
    CHECK(count_drawings(5, all) == 88);
    CHECK(count_drawings(6, all) == 715);

    EnumFilters audit;
    audit.delta_min = 2;
    audit.theta_min = 3;
    CHECK(count_drawings(5, audit) == 12);
    CHECK(count_drawings(6, audit) == 47);
}

TEST_CASE("random_lists") {
    OuterDrawing c4 = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    ListAssignment full = random_lists(c4, 4, 4, 11);
    for (const auto& [e, colors] : full) CHECK(colors == std::vector<Color>{0, 1, 2, 3});

    ListAssignment a = random_lists(c4, 4, 8, 5);
    ListAssignment b = random_lists(c4, 4, 8, 5);
    CHECK(a == b);
    for (const auto& [e, colors] : a) {
        CHECK(colors.size() == 4);
        for (Color c : colors) {
            CHECK(c >= 0);
            CHECK(c < 8);
        }
    }

    // wide palettes spread lists out: most pairs disjoint
    OuterDrawing big = random_instance([] {
        GeneratorConfig cfg;
        cfg.n = 30;
        cfg.seed = 3;
        return cfg;
    }());
    ListAssignment wide = random_lists(big, 4, 100, 9);
    int disjoint = 0, pairs = 0;
    for (auto i = wide.begin(); i != wide.end(); ++i) {
        for (auto j = std::next(i); j != wide.end(); ++j) {
            pairs++;
            std::set<Color> inter(i->second.begin(), i->second.end());
            bool any = false;
            for (Color c : j->second) any |= inter.count(c) > 0;
            if (!any) disjoint++;
        }
    }
    CHECK(disjoint * 10 > pairs * 7);  // loose statistical check

    CHECK_THROWS_AS(random_lists(c4, 4, 3, 1), std::invalid_argument);
}

#include "o1p/catalog.hpp"

namespace o1p {

// Shipped catalog.  Configuration vertices are numbered along the boundary
// walk they were read off from; solid vertices carry their exact degree,
// hollow vertices a minimum (= pictured incidence) and, where the reduction
// arithmetic needs one, a maximum.  Each reduction stores the removed-edge
// to gadget-edge correspondence used by the availability check and the
// extension step.  figure_ref is a terse provenance tag into the source
// figure set (fig1/fig2 = reducible configurations, fig3/fig4 = gadgets).
const std::string& builtin_catalog_json() {
    static const std::string text = R"JSON({
  "configurations": [
    {
      "id": "G1",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 1},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "hollow", "min_deg": 1, "max_deg": 3}
      ],
      "edges": [["1", "2"], ["2", "3"]],
      "identifiable": true,
      "reduction": {
        "adhoc": "path",
        "gadget": "PATH2",
        "edge_map": {"1-2": "u-x", "2-3": "u-y"}
      },
      "figure_ref": "fig1/G1",
      "notes": "degree-2 vertex with one neighbor of degree at most 3; the cap on vertex 3 gives the second removed edge two available colors"
    },
    {
      "id": "G2",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "3"], ["3", "5"]],
      "identifiable": true,
      "reduction": {
        "gadget": "T3",
        "edge_map": {
          "1-2": "u-x", "1-3": "v-x", "2-3": "u-v",
          "3-4": "v-w", "3-5": "v-y", "4-5": "w-y"
        }
      },
      "figure_ref": "fig1/G2",
      "notes": "two triangles sharing the degree-4 center; the degree-2 boundary vertices carry the size-4 edges of the target"
    },
    {
      "id": "G3",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [["1", "2"], ["2", "4"], ["3", "4"], ["1", "3"]],
      "identifiable": true,
      "reduction": {
        "adhoc": "4-cycle",
        "gadget": "C4",
        "edge_map": {"1-2": "v-x", "2-4": "w-x", "3-4": "w-y", "1-3": "v-y"}
      },
      "figure_ref": "fig1/G3",
      "notes": "crossing pair drawn as a 4-cycle; the two solid vertices are the opposite pair"
    },
    {
      "id": "G4",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 3},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "hollow", "min_deg": 3}
      ],
      "edges": [["1", "2"], ["1", "3"], ["2", "3"], ["2", "5"], ["3", "4"], ["3", "5"], ["4", "5"]],
      "identifiable": true,
      "reduction": {
        "gadget": "T4",
        "edge_map": {
          "1-2": "v-x", "1-3": "w-x", "2-5": "v-y", "3-5": "w-y",
          "2-3": "v-w", "4-5": "y-z", "3-4": "w-z"
        }
      },
      "figure_ref": "fig1/G4",
      "notes": ""
    },
    {
      "id": "G5",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 3},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "solid", "deg": 2},
        {"name": "7", "kind": "hollow", "min_deg": 3}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"], ["6", "7"],
        ["1", "3"], ["1", "5"], ["3", "7"], ["5", "7"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "T6",
        "edge_map": {
          "1-2": "p-x", "2-3": "p-v", "3-4": "q-v", "4-5": "q-w", "5-6": "r-w",
          "6-7": "r-y", "1-3": "v-x", "1-5": "w-x", "3-7": "v-y", "5-7": "w-y"
        }
      },
      "figure_ref": "fig1/G5",
      "notes": ""
    },
    {
      "id": "G6",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 3},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "solid", "deg": 2},
        {"name": "6", "kind": "hollow", "min_deg": 3}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["1", "3"], ["3", "4"], ["1", "4"],
        ["3", "6"], ["4", "5"], ["5", "6"], ["4", "6"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "T5",
        "edge_map": {
          "1-3": "v-x", "1-4": "w-x", "3-6": "v-y", "4-6": "w-y", "3-4": "v-w",
          "2-3": "r-v", "1-2": "r-x", "4-5": "s-w", "5-6": "s-y"
        }
      },
      "figure_ref": "fig1/G6",
      "notes": ""
    },
    {
      "id": "G7",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 2},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "solid", "deg": 2},
        {"name": "7", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"], ["6", "7"],
        ["1", "5"], ["3", "7"], ["3", "5"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH8",
        "edge_map": {
          "3-7": "v-y", "1-5": "w-x", "3-5": "v-w", "2-3": "v-xp", "5-6": "w-yp",
          "1-2": "x-xp", "6-7": "y-yp", "3-4": "u-v", "4-5": "u-w"
        }
      },
      "figure_ref": "fig1/G7",
      "notes": ""
    },
    {
      "id": "G8",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "solid", "deg": 2},
        {"name": "6", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"],
        ["1", "4"], ["2", "4"], ["2", "6"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH9",
        "edge_map": {
          "1-2": "v-x", "1-4": "w-x", "2-6": "v-y", "5-6": "y-yp",
          "4-5": "w-yp", "2-4": "v-w", "2-3": "u-v", "3-4": "u-w"
        }
      },
      "figure_ref": "fig1/G8",
      "notes": ""
    },
    {
      "id": "G9",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "hollow", "min_deg": 2, "max_deg": 3}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "4"], ["2", "4"], ["2", "5"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH1",
        "edge_map": {
          "1-2": "v-x", "1-4": "w-x", "2-5": "v-y", "4-5": "w-y",
          "2-4": "v-w", "2-3": "u-v", "3-4": "u-w"
        }
      },
      "figure_ref": "fig1/G9",
      "notes": "the cap on vertex 5 supplies the size-3 edge of the target"
    },
    {
      "id": "G10",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 3},
        {"name": "3", "kind": "solid", "deg": 3},
        {"name": "4", "kind": "hollow", "min_deg": 2, "max_deg": 3}
      ],
      "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["1", "3"], ["2", "4"]],
      "identifiable": true,
      "reduction": {
        "gadget": "R1",
        "edge_map": {
          "1-2": "v-x", "1-3": "w-x", "3-4": "w-y", "2-4": "v-y", "2-3": "v-w"
        }
      },
      "figure_ref": "fig1/G10",
      "notes": "the cap on vertex 4 supplies the size-3 edge of the target"
    },
    {
      "id": "G11",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 3},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "hollow", "min_deg": 3}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "5"],
        ["1", "4"], ["2", "4"], ["2", "5"]
      ],
      "identifiable": true,
      "reduction": null,
      "figure_ref": "fig1/G11",
      "notes": "catalog entry only; not matched by the solver (no reduction target)"
    },
    {
      "id": "G12",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 3},
        {"name": "2", "kind": "solid", "deg": 3},
        {"name": "3", "kind": "solid", "deg": 3},
        {"name": "4", "kind": "hollow", "min_deg": 3}
      ],
      "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"], ["1", "3"], ["2", "4"]],
      "identifiable": true,
      "reduction": {
        "gadget": "R3",
        "extra_removed": ["1-4"],
        "edge_map": {
          "1-2": "v-x", "1-3": "w-x", "3-4": "w-y", "2-4": "v-y",
          "2-3": "v-w", "1-4": "x-y"
        }
      },
      "figure_ref": "fig1/G12",
      "notes": "the hollow-hollow edge 1-4 is uncolored together with the solid-incident edges; the target recolors it as its size-2 edge"
    },
    {
      "id": "G13",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "solid", "deg": 2},
        {"name": "7", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "4"], ["2", "4"],
        ["2", "5"], ["5", "6"], ["5", "7"], ["6", "7"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH4",
        "edge_map": {
          "1-2": "v-x", "1-4": "w-x", "2-5": "v-y", "4-5": "w-y", "2-4": "v-w",
          "5-6": "s-y", "6-7": "s-z", "5-7": "y-z", "2-3": "u-v", "3-4": "u-w"
        }
      },
      "figure_ref": "fig1/G13",
      "notes": ""
    },
    {
      "id": "G14",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 3},
        {"name": "3", "kind": "solid", "deg": 3},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "solid", "deg": 2},
        {"name": "6", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["1", "3"], ["2", "4"],
        ["4", "5"], ["4", "6"], ["5", "6"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "R4",
        "edge_map": {
          "1-2": "v-x", "1-3": "w-x", "2-4": "v-y", "3-4": "w-y", "2-3": "v-w",
          "4-5": "s-y", "5-6": "s-z", "4-6": "y-z"
        }
      },
      "figure_ref": "fig1/G14",
      "notes": ""
    },
    {
      "id": "S1",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 3},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 2},
        {"name": "4", "kind": "solid", "deg": 4},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "hollow", "min_deg": 1, "max_deg": 3}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "5"],
        ["1", "4"], ["2", "4"], ["2", "5"], ["5", "6"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH5",
        "edge_map": {
          "1-2": "v-x", "1-4": "w-x", "1-5": "x-y", "2-5": "v-y", "4-5": "w-y",
          "2-4": "v-w", "5-6": "y-z", "2-3": "u-v", "3-4": "u-w"
        }
      },
      "figure_ref": "fig2/S1",
      "notes": "the cap on vertex 6 gives its pendant edge two available colors"
    },
    {
      "id": "S2",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "solid", "deg": 4}
      ],
      "edges": [
        ["1", "2"], ["1", "6"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"],
        ["2", "6"], ["2", "5"], ["3", "5"], ["3", "6"]
      ],
      "identifiable": true,
      "anchor": "1",
      "reduction": {
        "gadget": "RH6",
        "edge_map": {
          "2-3": "v-x", "2-5": "w-x", "3-6": "v-y", "5-6": "w-y", "3-5": "v-w",
          "2-6": "x-y", "1-2": "x-z", "1-6": "y-z", "3-4": "u-v", "4-5": "u-w"
        }
      },
      "figure_ref": "fig2/S2",
      "notes": "vertex 1 is the distinguished cut-vertex anchor"
    },
    {
      "id": "S3",
      "vertices": [
        {"name": "1", "kind": "hollow", "min_deg": 2},
        {"name": "2", "kind": "solid", "deg": 4},
        {"name": "3", "kind": "solid", "deg": 4},
        {"name": "4", "kind": "solid", "deg": 2},
        {"name": "5", "kind": "solid", "deg": 4},
        {"name": "6", "kind": "solid", "deg": 4},
        {"name": "7", "kind": "solid", "deg": 4},
        {"name": "8", "kind": "solid", "deg": 2},
        {"name": "9", "kind": "hollow", "min_deg": 2}
      ],
      "edges": [
        ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"], ["2", "6"],
        ["2", "5"], ["3", "5"], ["3", "6"], ["6", "7"], ["7", "8"], ["8", "9"],
        ["1", "7"], ["7", "9"]
      ],
      "identifiable": true,
      "reduction": {
        "gadget": "RH7",
        "edge_map": {
          "2-3": "v-x", "2-5": "w-x", "3-6": "v-y", "5-6": "w-y", "3-5": "v-w",
          "2-6": "x-y", "1-2": "x-xp", "1-7": "xp-yp", "6-7": "y-yp",
          "7-9": "yp-z", "8-9": "s-z", "7-8": "s-yp", "3-4": "u-v", "4-5": "u-w"
        }
      },
      "figure_ref": "fig2/S3",
      "notes": ""
    }
  ],
  "gadgets": [
    {
      "id": "PATH2",
      "vertices": ["x", "u", "y"],
      "edges": [["u", "x"], ["u", "y"]],
      "list_sizes": {"u-x": 1, "u-y": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 3,
      "figure_ref": "rule/G1",
      "notes": "ordered greedy rule behind G1: color u-x, then u-y"
    },
    {
      "id": "C4",
      "vertices": ["v", "x", "w", "y"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "w-y": 2, "v-y": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 8,
      "figure_ref": "rule/G3",
      "notes": "a 4-cycle is edge 2-choosable"
    },
    {
      "id": "TRIANGLE",
      "vertices": ["s", "y", "z"],
      "edges": [["s", "y"], ["y", "z"], ["s", "z"]],
      "list_sizes": {"s-y": 4, "y-z": 2, "s-z": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 8,
      "figure_ref": "fig4/triangle",
      "notes": "carries the three-pair completion property checked by verify_triangle_lemma"
    },
    {
      "id": "T1",
      "vertices": ["v", "w", "x", "y", "z"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["w", "z"], ["y", "z"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "w-y": 2, "v-y": 2, "w-z": 3, "y-z": 3},
      "condition": {"kind": "disjoint_lists", "edges": ["w-x", "v-y"]},
      "claim": "colorable-under-condition",
      "default_cap": 14,
      "figure_ref": "fig3/T1",
      "notes": ""
    },
    {
      "id": "T2",
      "vertices": ["v", "w", "x", "y"],
      "edges": [["v", "w"], ["w", "x"], ["w", "y"], ["x", "y"]],
      "list_sizes": {"v-w": 2, "w-x": 3, "w-y": 2, "x-y": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 9,
      "figure_ref": "fig3/T2",
      "notes": ""
    },
    {
      "id": "T3",
      "vertices": ["u", "x", "v", "y", "w"],
      "edges": [["u", "x"], ["v", "x"], ["v", "y"], ["w", "y"], ["u", "v"], ["v", "w"]],
      "list_sizes": {"u-x": 2, "v-x": 2, "v-y": 2, "w-y": 2, "u-v": 4, "v-w": 4},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 16,
      "figure_ref": "fig3/T3",
      "notes": ""
    },
    {
      "id": "T4",
      "vertices": ["v", "w", "x", "y", "z"],
      "edges": [["v", "x"], ["w", "x"], ["v", "y"], ["w", "y"], ["v", "w"], ["y", "z"], ["w", "z"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "v-y": 3, "w-y": 3, "v-w": 4, "y-z": 3, "w-z": 4},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 7,
      "figure_ref": "fig3/T4",
      "notes": ""
    },
    {
      "id": "T5",
      "vertices": ["v", "w", "x", "y", "r", "s"],
      "edges": [
        ["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"],
        ["r", "v"], ["r", "x"], ["s", "w"], ["s", "y"]
      ],
      "list_sizes": {
        "v-x": 3, "w-x": 3, "w-y": 3, "v-y": 3, "v-w": 4,
        "r-v": 4, "r-x": 3, "s-w": 4, "s-y": 3
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 5,
      "figure_ref": "fig3/T5",
      "notes": ""
    },
    {
      "id": "T6",
      "vertices": ["x", "p", "v", "q", "w", "r", "y"],
      "edges": [
        ["p", "x"], ["p", "v"], ["q", "v"], ["q", "w"], ["r", "w"], ["r", "y"],
        ["v", "x"], ["v", "y"], ["w", "x"], ["w", "y"]
      ],
      "list_sizes": {
        "p-x": 3, "p-v": 4, "q-v": 4, "q-w": 4, "r-w": 4, "r-y": 3,
        "v-x": 3, "v-y": 3, "w-x": 3, "w-y": 3
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 5,
      "figure_ref": "fig3/T6",
      "notes": ""
    },
    {
      "id": "R0",
      "vertices": ["v", "x", "w", "y"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "w-y": 2, "v-y": 2, "v-w": 4},
      "condition": {"kind": "r0_exception"},
      "claim": "colorable-unless-exception",
      "default_cap": 12,
      "figure_ref": "fig4/R0",
      "notes": "colorable unless each color of v-w lies in the lists of exactly two adjacent cycle edges"
    },
    {
      "id": "R1",
      "vertices": ["v", "x", "w", "y"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "w-y": 3, "v-y": 2, "v-w": 4},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 13,
      "figure_ref": "fig4/R1",
      "notes": ""
    },
    {
      "id": "R2",
      "vertices": ["v", "x", "w", "y", "z"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"], ["y", "z"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "w-y": 3, "v-y": 3, "v-w": 4, "y-z": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 16,
      "figure_ref": "fig4/R2",
      "notes": ""
    },
    {
      "id": "R3",
      "vertices": ["v", "x", "w", "y"],
      "edges": [["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"], ["x", "y"]],
      "list_sizes": {"v-x": 3, "w-x": 3, "w-y": 3, "v-y": 3, "v-w": 4, "x-y": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 18,
      "figure_ref": "fig4/R3",
      "notes": ""
    },
    {
      "id": "R4",
      "vertices": ["v", "x", "w", "y", "s", "z"],
      "edges": [
        ["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"],
        ["s", "y"], ["s", "z"], ["y", "z"]
      ],
      "list_sizes": {
        "v-x": 2, "w-x": 2, "w-y": 4, "v-y": 4, "v-w": 4, "s-y": 4, "s-z": 2, "y-z": 2
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 6,
      "figure_ref": "fig4/R4",
      "notes": ""
    },
    {
      "id": "R5",
      "vertices": ["v", "x", "w", "y", "z"],
      "edges": [
        ["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"], ["x", "y"], ["y", "z"]
      ],
      "list_sizes": {"v-x": 3, "w-x": 3, "w-y": 4, "v-y": 4, "v-w": 4, "x-y": 3, "y-z": 2},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 6,
      "figure_ref": "fig4/R5",
      "notes": ""
    },
    {
      "id": "R6",
      "vertices": ["v", "x", "w", "y", "z"],
      "edges": [
        ["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"],
        ["x", "y"], ["x", "z"], ["y", "z"]
      ],
      "list_sizes": {
        "v-x": 4, "w-x": 4, "w-y": 4, "v-y": 4, "v-w": 4, "x-y": 4, "x-z": 2, "y-z": 2
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 6,
      "figure_ref": "fig4/R6",
      "notes": ""
    },
    {
      "id": "R7",
      "vertices": ["v", "x", "w", "y", "xp", "yp", "z", "s"],
      "edges": [
        ["v", "x"], ["w", "x"], ["w", "y"], ["v", "y"], ["v", "w"], ["x", "y"],
        ["x", "xp"], ["xp", "yp"], ["y", "yp"], ["yp", "z"], ["s", "z"], ["s", "yp"]
      ],
      "list_sizes": {
        "v-x": 4, "w-x": 4, "w-y": 4, "v-y": 4, "v-w": 4, "x-y": 4,
        "x-xp": 2, "xp-yp": 2, "y-yp": 4, "yp-z": 2, "s-z": 2, "s-yp": 4
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 4,
      "figure_ref": "fig4/R7",
      "notes": "the six edges below x-y form the fixture for verify_below_xy"
    },
    {
      "id": "R8",
      "vertices": ["v", "w", "x", "y", "xp", "yp"],
      "edges": [
        ["v", "y"], ["w", "x"], ["v", "w"], ["v", "xp"], ["w", "yp"], ["x", "xp"], ["y", "yp"]
      ],
      "list_sizes": {
        "v-y": 2, "w-x": 2, "v-w": 4, "v-xp": 4, "w-yp": 4, "x-xp": 2, "y-yp": 2
      },
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 6,
      "figure_ref": "fig4/R8",
      "notes": "hexagon v-y-yp-w-x-xp with long chord v-w; no 4-cycle on v,x,w,y"
    },
    {
      "id": "R9",
      "vertices": ["v", "w", "x", "y", "yp"],
      "edges": [["v", "x"], ["w", "x"], ["v", "y"], ["v", "w"], ["y", "yp"], ["w", "yp"]],
      "list_sizes": {"v-x": 2, "w-x": 2, "v-y": 2, "v-w": 4, "y-yp": 2, "w-yp": 4},
      "condition": null,
      "claim": "always-colorable",
      "default_cap": 16,
      "figure_ref": "fig4/R9",
      "notes": "pentagon v-x-w-yp-y with chord v-w; no 4-cycle on v,x,w,y"
    }
  ],
  "hat_gadgets": {
    "comment": "RHi equals Ri plus a vertex u adjacent to v and w, both new edges with lists of size 4",
    "entries": [
      {"id": "RH1", "base": "R1", "claim": "always-colorable", "default_cap": 7, "condition": null},
      {"id": "RH2", "base": "R2", "claim": "colorable-under-condition", "default_cap": 6,
       "condition": {"kind": "any_of", "options": [
         {"kind": "opposite_shared_color"},
         {"kind": "equal_lists", "edges": ["v-y", "w-y"]}
       ]}},
      {"id": "RH3", "base": "R3", "claim": "unclaimed", "default_cap": 6, "condition": null},
      {"id": "RH4", "base": "R4", "claim": "always-colorable", "default_cap": 5, "condition": null},
      {"id": "RH5", "base": "R5", "claim": "always-colorable", "default_cap": 5, "condition": null},
      {"id": "RH6", "base": "R6", "claim": "always-colorable", "default_cap": 5, "condition": null},
      {"id": "RH7", "base": "R7", "claim": "always-colorable", "default_cap": 4, "condition": null},
      {"id": "RH8", "base": "R8", "claim": "always-colorable", "default_cap": 6, "condition": null},
      {"id": "RH9", "base": "R9", "claim": "always-colorable", "default_cap": 6, "condition": null}
    ]
  }
})JSON";
    return text;
}

}  // namespace o1p

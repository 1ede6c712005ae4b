#include "gsb/bundled.hpp"

namespace gsb {

namespace {

const std::vector<BundledExample> kExamples = {
    {
        "main",
        "four-relation parafree example over x1,x2,y1,y2",
        "certified-residually-nilpotent",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "y1", "weight": 3},
    {"name": "y2", "weight": 3}
  ],
  "relations": [
    "x1*x2 + y1^2 - y1",
    "x2*x1 + y2^2 - y2",
    "x1*y2 - y1*x1",
    "x2*y1 - y2*x2"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "y1", "y2"]},
    "series": {"kind": "theta-lex", "precedence": ["y1", "y2", "x1", "x2"]}
  },
  "meta": {
    "name": "main",
    "expected_verdict": "certified-residually-nilpotent",
    "notes": "four-relation parafree example; normal words avoid x1x2, x2x1, x1y2, x2y1"
  }
}
)json",
    },
    {
        "kxy",
        "commutative polynomial ring in two variables",
        "certified-residually-nilpotent",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x", "weight": 1},
    {"name": "y", "weight": 1}
  ],
  "relations": [
    "x*y - y*x"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x", "y"]},
    "series": {"kind": "deg-lex", "precedence": ["y", "x"]}
  },
  "meta": {
    "name": "kxy",
    "expected_verdict": "certified-residually-nilpotent",
    "notes": "commutative polynomial ring in two variables; the two orders make xy - yx monic with matching leads"
  }
}
)json",
    },
    {
        "exrn",
        "one-relation example x3 = x1*x2 + x3^2",
        "certified-residually-nilpotent",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "x3", "weight": 3}
  ],
  "relations": [
    "x1*x2 + x3^2 - x3"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "x3"]},
    "series": {"kind": "theta-lex", "precedence": ["x3", "x1", "x2"]}
  },
  "meta": {
    "name": "exrn",
    "expected_verdict": "certified-residually-nilpotent",
    "notes": "one-relation example x3 = x1*x2 + x3^2; parafree of rank 2"
  }
}
)json",
    },
    {
        "para",
        "standard parafree construction for x1*x2 + y^2",
        "certified-residually-nilpotent",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "y", "weight": 3}
  ],
  "relations": [
    "y - x1*x2 - y^2"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "y"]},
    "series": {"kind": "theta-lex", "precedence": ["y", "x1", "x2"]}
  },
  "meta": {
    "name": "para",
    "expected_verdict": "certified-residually-nilpotent",
    "notes": "standard parafree construction for the single acyclic polynomial x1*x2 + y^2"
  }
}
)json",
    },
    {
        "family",
        "one-relation family template u = x1*x2, phi = y1^2",
        "certified-residually-nilpotent",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "y1", "weight": 3}
  ],
  "relations": [
    "x1*x2 - y1^2"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "y1"]},
    "series": {"kind": "theta-lex", "precedence": ["y1", "x1", "x2"]}
  },
  "meta": {
    "name": "family",
    "expected_verdict": "certified-residually-nilpotent",
    "notes": "one-relation family template u = phi with u = x1*x2 (unbordered) and phi = y1^2"
  }
}
)json",
    },
    {
        "counterexample-two",
        "I-basis failure: x3, x4 dependent in I/I^2",
        "gr1-rank-1",
        false,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "x3", "weight": 3},
    {"name": "x4", "weight": 3}
  ],
  "relations": [
    "x1*x2 + x3 + x4"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "x3", "x4"]},
    "series": {"kind": "theta-lex", "precedence": ["x3", "x4", "x1", "x2"]}
  },
  "meta": {
    "name": "counterexample-two",
    "expected_gr1_rank": 1,
    "notes": "x3 + x4 = -x1*x2 in I^2, so the images of x3 and x4 in I/I^2 are linearly dependent"
  }
}
)json",
    },
    {
        "counterexample-one",
        "documentation only: tuple-lex order rejected by design",
        "unsupported-order",
        true,
        R"json({
  "field": "rational",
  "generators": [
    {"name": "x1", "weight": 1},
    {"name": "x2", "weight": 1},
    {"name": "x3", "weight": 1},
    {"name": "x4", "weight": 1}
  ],
  "relations": [
    "x2*x3*x4 - x1"
  ],
  "orders": {
    "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", "x3", "x4"]},
    "series": {"kind": "ntuple-lex", "precedence": ["x1", "x2", "x3", "x4"]}
  },
  "meta": {
    "name": "counterexample-one",
    "expected_verdict": "unsupported-order",
    "notes": "documentation only: the intended order compares multidegree tuples lexicographically and is not an N-order, so parsing rejects it by design"
  }
}
)json",
    },
};

}  // namespace

const std::vector<BundledExample>& bundled_examples() { return kExamples; }

const BundledExample* find_bundled(const std::string& name) {
    for (const auto& e : kExamples)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace gsb

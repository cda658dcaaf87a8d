#pragma once

#include "cbcheck/separator.hpp"

namespace cbcheck {

class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parsed problem file: base field, variable list, ideal generators, and an
/// optional primary decomposition (one `component:` block per local factor,
/// not yet validated).
struct Problem {
    FieldSpecPtr field;
    PolyRingPtr ring;
    std::optional<IdealHandle> ideal;
    std::vector<DecompositionComponent> components;
};

Problem parse_problem_text(const std::string& text);
Problem parse_problem_file(const std::string& path);

}  // namespace cbcheck

#ifndef HOMALG_REPORT_HPP
#define HOMALG_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homalg {

/// An input tuple on which the two sides of an identity disagree.  `clause`
/// names the sub-identity when a checker verifies more than one.
struct Counterexample {
    std::string clause;
    std::vector<std::string> inputs;
    std::string lhs;
    std::string rhs;
};

/// Outcome of an exhaustive sweep.  The sweep covers every tuple drawn from
/// the declared test bases, so a pass is a proof on the spanned truncation.
struct CheckReport {
    std::string axiom;    // stable identifier, e.g. "hom-associativity"
    std::string formula;  // the identity checked, in plain text
    std::string bound;    // which bases were swept
    std::size_t tested = 0;
    std::size_t failures = 0;
    std::vector<Counterexample> counterexamples;  // first `max_recorded` failures

    static constexpr std::size_t max_recorded = 64;

    bool passed() const noexcept { return failures == 0; }

    void record(Counterexample c) {
        ++failures;
        if (counterexamples.size() < max_recorded) counterexamples.push_back(std::move(c));
    }

    bool has_counterexample(const std::vector<std::string>& inputs) const {
        return std::any_of(counterexamples.begin(), counterexamples.end(),
                           [&](const Counterexample& c) { return c.inputs == inputs; });
    }
};

inline std::string render_text(const CheckReport& r) {
    std::string out = (r.passed() ? "PASS " : "FAIL ") + r.axiom + "  [" + r.formula + "]  " + r.bound +
                      ", " + std::to_string(r.tested) + " cases";
    if (!r.passed()) out += ", " + std::to_string(r.failures) + " failures";
    out += '\n';
    for (const auto& c : r.counterexamples) {
        out += "  counterexample";
        if (!c.clause.empty()) out += " (" + c.clause + ")";
        out += ": (";
        for (std::size_t i = 0; i < c.inputs.size(); ++i) out += (i ? ", " : "") + c.inputs[i];
        out += ")\n    lhs = " + c.lhs + "\n    rhs = " + c.rhs + "\n";
    }
    return out;
}

/// A precondition of a construction failed; carries the failing report.
class PreconditionError : public std::invalid_argument {
   public:
    PreconditionError(const std::string& what, CheckReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}

    const CheckReport& report() const noexcept { return report_; }

   private:
    CheckReport report_;
};

/// A structure map produced an element outside the enumerated test range.
class RangeEscape : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace homalg

#endif

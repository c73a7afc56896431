/*
   Copyright 2026 The cselab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CSELAB_REPORTS_HPP
#define CSELAB_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cselab/counterexamples.hpp"
#include "cselab/degeneration.hpp"
#include "cselab/quadrature.hpp"

// Machine-readable renderings. JSON objects have sorted keys, floating-point
// values are rounded to 12 significant digits, exponents are {"num","den"}
// or the string "inf", and exact scalars are strings in the expression grammar.

namespace cselab {

enum class Verdict { None, Holds, Violated, Converged, Inconclusive, Bounded, Growth };

enum class ReportFormat { Json, Csv, PlotData };

ReportFormat parse_report_format(std::string_view text);

struct Report {
    std::string kind;
    std::string json;
    std::string csv;   // empty when the report has no tabular form
    std::string plot;  // two whitespace-separated columns, empty when not applicable
    Verdict verdict = Verdict::None;
    /// A verdict that contradicts a theorem for holomorphic input.
    bool theorem_violation = false;

    const std::string& render(ReportFormat format) const;
};

/// "1/3" or "-2/7"; also accepts decimals and e-notation, and Gaussian
/// rationals in the expression grammar ("i/100").
GaussianRational parse_scalar(std::string_view text);

Report exponent_report(const MixedFunction& f, const SemicontinuityReport& r);

struct LctEntryResult {
    ResolutionData data;
    ResolutionBound bound;
    std::optional<Exponent> polygon_estimate;  // when the entry names a parseable curve
};

Report lct_report(const std::optional<MixedFunction>& f, const std::vector<LctEntryResult>& entries);

Report polygon_report(const MixedFunction& f);

/// With R1 > 0 each row carries the three-annulus split of I_t (null where t is too large for R1).
Report sweep_report(const MixedFunction& f, const SweepReport& r, double R1 = 0,
                    const std::vector<std::optional<Decomposition>>& split = {});

struct YoungFactor {
    MixedFunction factor;
    unsigned order = 0;  // l_i = 1 / c_0(f_i)
    double exponent = 0; // c l / l_i
    BoundReport bound;
};

Report bound_report(const MixedFunction& f, const BoundReport& r, const std::vector<YoungFactor>& factors);

Report counterexample_report(const std::vector<std::pair<CounterexampleRecord, ViolationReport>>& records);

Report multiplicity_probe_report(const UnivariatePoly& f, const GaussianRational& zero, double c, const ProbeReport& r);

Report holder_probe_report(unsigned n, double scale, const HolderReport& r);

/// %.12g with "inf"/"nan" spelled out; the shared float format of every report.
std::string format_number(double v);

}  // namespace cselab

#endif

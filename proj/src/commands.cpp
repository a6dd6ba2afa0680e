#include "fueter/commands.hpp"

#include "fueter/operators.hpp"
#include "fueter/parallel.hpp"
#include "fueter/random.hpp"

#include <sstream>

namespace fueter {

void validate(const RunConfig& cfg) {
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    if (cfg.k < 2)
        throw UsageError("--k must be at least 2: for k = 0 and k = 1 the complex starts with second-order "
                         "operators, and the theory here is restricted to k >= 2");
    if (cfg.degree < 0) throw UsageError("--degree must be nonnegative");
    if (cfg.trials < 1) throw UsageError("--trials must be a positive integer");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dimension_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream out;
    out << "degree,dimension,cumulative\n";
    for (const auto& r : rows) out << r.degree << ',' << r.dimension << ',' << r.cumulative << '\n';
    return out.str();
}

namespace {

Json config_json(const std::string& command, const RunConfig& cfg) {
    return {{"command", command}, {"n", cfg.n},         {"k", cfg.k},
            {"degree", cfg.degree}, {"seed", cfg.seed}, {"trials", cfg.trials}};
}

SuiteConfig suite(const RunConfig& cfg) { return {cfg.degree, cfg.seed, cfg.trials}; }

}  // namespace

CommandOutput cmd_verify_identities(const RunConfig& cfg) {
    validate(cfg);
    const ComplexParams params(cfg.n, cfg.k);
    CommandOutput out;
    out.report = config_json("verify-identities", cfg);
    Json list = Json::array();
    bool all = true;
    for (const auto& check : run_identity_suite(params, suite(cfg))) {
        all = all && check.passed();
        list.push_back(to_json(check));
    }
    out.report["identities"] = list;
    out.report["passed"] = all;
    out.status = all ? 0 : 1;
    return out;
}

CommandOutput cmd_verify_estimates(const RunConfig& cfg) {
    validate(cfg);
    const ComplexParams params(cfg.n, cfg.k);
    struct Trial {
        EstimateReport estimate;
        Rational energy_defect;
    };
    std::vector<Trial> trials(static_cast<std::size_t>(cfg.trials));
    parallel_for(trials.size(), [&](std::size_t t) {
        SectionSampler sampler(trial_seed(cfg.seed, static_cast<int>(t)));
        const auto f = sampler.section<Space::V1>(params, cfg.degree);
        trials[t] = {verify_l2_estimate(f), verify_energy_identity(f)};
    });

    Rational min_margin = trials.front().estimate.margin;
    Rational min_sharp = trials.front().estimate.sharp_margin;
    Rational max_defect = 0;
    Json rows = Json::array();
    for (std::size_t t = 0; t < trials.size(); ++t) {
        const auto& tr = trials[t];
        if (tr.estimate.margin < min_margin) min_margin = tr.estimate.margin;
        if (tr.estimate.sharp_margin < min_sharp) min_sharp = tr.estimate.sharp_margin;
        const Rational defect = abs(tr.energy_defect);
        if (defect > max_defect) max_defect = defect;
        Json row = to_json(tr.estimate);
        row["energy_defect"] = to_string(tr.energy_defect);
        rows.push_back({{"trial", t}, {"estimate", row}});
    }
    const bool passed = min_margin >= 0 && min_sharp >= 0 && max_defect == 0;

    CommandOutput out;
    out.report = config_json("verify-estimates", cfg);
    out.report["min_margin"] = to_string(min_margin);
    out.report["min_sharp_margin"] = to_string(min_sharp);
    out.report["max_energy_defect"] = to_string(max_defect);
    out.report["passed"] = passed;
    out.report["trials_detail"] = rows;
    out.status = passed ? 0 : 1;
    return out;
}

CommandOutput cmd_basis(const RunConfig& cfg) {
    validate(cfg);
    const ComplexParams params(cfg.n, cfg.k);
    const RegularBasis basis = regular_basis(params, cfg.degree);

    bool regular = true;
    bool harmonic = true;
    Json elements = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.elements()[i];
        regular = regular && d0_apply(e).is_zero();
        for (const auto& c : e.components()) harmonic = harmonic && laplacian_apply(c).is_zero();
        elements.push_back({{"degree", basis.element_degree(i)}, {"section", section_to_json(e)}});
    }
    bool complete = true;
    for (const auto& b : basis.blocks()) complete = complete && b.rank + b.count == b.domain;

    const auto table = dimension_table(basis);
    Json dims = Json::array();
    for (const auto& r : table) dims.push_back({{"degree", r.degree}, {"dimension", r.dimension}, {"cumulative", r.cumulative}});

    CommandOutput out;
    out.report = config_json("basis", cfg);
    out.report["dimensions"] = dims;
    out.report["regular"] = regular;
    out.report["harmonic"] = harmonic;
    out.report["rank_nullity_complete"] = complete;
    out.report["passed"] = regular && harmonic && complete;
    out.status = regular && harmonic && complete ? 0 : 1;
    Json basis_json = {{"n", cfg.n}, {"k", cfg.k}, {"max_degree", cfg.degree}, {"elements", elements}};
    out.files.emplace_back("dimensions.csv", dimension_csv(table));
    out.files.emplace_back("basis.json", dump(basis_json));
    return out;
}

CommandOutput cmd_kernel(const RunConfig& cfg) {
    validate(cfg);
    const ComplexParams params(cfg.n, cfg.k);
    const CanonicalSolver solver(params, cfg.degree);
    const KernelTruncation trunc(solver.basis());
    const int nv = params.num_vars();
    SectionSampler sampler(cfg.seed);

    constexpr int kReproducePoints = 5;
    int reproduce_failures = 0;
    for (int p = 0; p < kReproducePoints; ++p) {
        const auto x = sampler.point(nv);
        for (const auto& e : trunc.basis().elements())
            if (!reproduce(trunc, e, x).exact()) ++reproduce_failures;
    }

    int hermitian_failures = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const auto x = sampler.point(nv);
        const auto y = sampler.point(nv);
        const auto kxy = kernel_eval(trunc, x, y);
        const auto kyx = kernel_eval(trunc, y, x);
        for (std::size_t i = 0; i < kxy.value.rows(); ++i)
            for (std::size_t j = 0; j < kxy.value.cols(); ++j)
                if (!(kxy.value(i, j) == kyx.value(j, i).conj())) {
                    ++hermitian_failures;
                    i = kxy.value.rows();
                    break;
                }
    }

    std::vector<WeightedScalar> defects(static_cast<std::size_t>(cfg.trials));
    parallel_for(defects.size(), [&](std::size_t t) {
        SectionSampler s(trial_seed(cfg.seed, static_cast<int>(t)));
        defects[t] = projection_consistency(s.section<Space::V0>(params, cfg.degree), solver);
    });
    Json defect_json = Json::array();
    bool projection_ok = true;
    for (const auto& d : defects) {
        projection_ok = projection_ok && d.is_zero();
        defect_json.push_back(to_json(d));
    }

    RaySpec ray;
    ray.origin.assign(static_cast<std::size_t>(nv), Rational(0));
    ray.direction.assign(static_cast<std::size_t>(nv), Rational(0));
    ray.direction[0] = 1;
    ray.first = 0;
    ray.step = 1;
    ray.steps = 7;
    const DecayProfile profile = decay_profile(trunc, ray);

    const bool passed = reproduce_failures == 0 && hermitian_failures == 0 && projection_ok;
    CommandOutput out;
    out.report = config_json("kernel", cfg);
    out.report["reproduce"] = {{"points", kReproducePoints},
                               {"elements", trunc.basis().size()},
                               {"failures", reproduce_failures}};
    out.report["hermitian"] = {{"pairs", cfg.trials}, {"failures", hermitian_failures}};
    out.report["projection_consistency"] = defect_json;
    out.report["decay_log_slope"] = profile.log_slope();
    out.report["passed"] = passed;
    out.status = passed ? 0 : 1;
    out.files.emplace_back("decay.csv", decay_profile_csv(profile));
    return out;
}

CommandOutput cmd_solve(const RunConfig& cfg, const std::string& input) {
    validate(cfg);
    AnySection parsed = section_from_string(input);
    auto* f_ptr = std::get_if<Spinor1Field>(&parsed);
    if (!f_ptr) throw SectionParseError("solve expects a V1 section");
    const Spinor1Field& f = *f_ptr;
    const SolveReport report = least_norm_solve(f, cfg.degree);
    CommandOutput out;
    out.report = config_json("solve", cfg);
    out.report["n"] = f.params().n();
    out.report["k"] = f.params().k();
    out.report["solve"] = to_json(report);
    const bool passed = report.residual_check && report.orthogonality_defect.is_zero();
    out.report["passed"] = passed;
    out.status = passed ? 0 : 1;
    return out;
}

}  // namespace fueter

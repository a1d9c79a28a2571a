#include "tpi/pipeline.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "tpi/model_export.hpp"

namespace tpi {

Rational parse_rational(const std::string& text) {
    const auto bad = [&text]() {
        return std::invalid_argument("malformed rational '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        try {
            std::size_t p1 = 0, p2 = 0;
            const long long n = std::stoll(num, &p1);
            const long long d = std::stoll(den, &p2);
            if (p1 != num.size() || p2 != den.size() || d == 0) throw bad();
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw bad();
        } catch (const std::out_of_range&) {
            throw bad();
        }
    }
    std::string digits = text;
    bool negative = false;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        negative = digits[0] == '-';
        digits.erase(0, 1);
    }
    const auto dot = digits.find('.');
    long long denominator = 1;
    if (dot != std::string::npos) {
        const std::size_t frac_digits = digits.size() - dot - 1;
        if (frac_digits == 0 || frac_digits > 15) throw bad();
        digits.erase(dot, 1);
        for (std::size_t i = 0; i < frac_digits; ++i) denominator *= 10;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    try {
        const long long numerator = std::stoll(digits);
        return Rational(negative ? -numerator : numerator, denominator);
    } catch (const std::exception&) {
        throw bad();
    }
}

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text,
                     const std::string& stage) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw LoadError(stage + ": cannot open '" + path.string() + "' for writing");
    os << text;
    if (!os) throw LoadError(stage + ": write to '" + path.string() + "' failed");
}

}  // namespace

int run_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string stage = "config";
    try {
        cfg.search.validate();
        if (cfg.network_path.empty()) throw std::invalid_argument("no network input given");

        stage = "load";
        const Network net = load_network(cfg.network_path, LoadOptions{cfg.lonlat});

        stage = "generate";
        const GenerationResult generated = generate_candidates(net, cfg.search);

        stage = "matrices";
        const PathMatrices m = build_matrices(generated.paths, net);

        stage = "problem";
        Rational lambda;
        if (cfg.lambda == "auto") {
            const long long rt = static_cast<long long>(m.remaining.size()) *
                                 static_cast<long long>(m.terminals.size());
            lambda = Rational(1, rt + 1);
        } else {
            lambda = parse_rational(cfg.lambda);
        }
        const IlpProblem problem = build_problem(m, lambda);

        stage = "solve";
        const Solution sol = solve(problem, cfg.limits);
        if (sol.status != SolveStatus::optimal) {
            err << "solve: search aborted by " << (sol.stats.nodes > cfg.limits.max_nodes ? "node" : "time")
                << " budget after " << sol.stats.nodes << " nodes\n";
            return 1;
        }

        stage = "diagnose";
        const DiagnosticReport report = diagnose(sol, m, net, cfg.k_nearest, generated.failures);

        stage = "emit";
        if (!cfg.out_solution.empty())
            write_text_file(cfg.out_solution, solution_to_json(sol, m).dump(2) + "\n", stage);
        if (!cfg.out_geojson.empty())
            write_text_file(cfg.out_geojson, network_to_geojson(net, &sol, &m).dump(2) + "\n", stage);
        if (!cfg.out_svg.empty()) {
            std::ostringstream svg;
            write_svg(net, &sol, &m, svg);
            write_text_file(cfg.out_svg, svg.str(), stage);
        }
        if (!cfg.out_model.empty()) {
            std::ostringstream model;
            if (cfg.out_model.extension() == ".mps")
                write_mps(problem, model);
            else
                write_lp(problem, model);
            write_text_file(cfg.out_model, model.str(), stage);
        }
        if (!cfg.out_diagnostics.empty())
            write_text_file(cfg.out_diagnostics, to_json(report).dump(2) + "\n", stage);

        out << "elements: " << net.size() << "\n";
        out << "candidate paths: " << m.path_count() << "\n";
        out << "selected paths: " << sol.selected_count << "\n";
        out << "assignments: " << sol.assignment_count << "\n";
        out << "objective: " << to_double(sol.objective) << "\n";
        out << "issues: " << report.issues.size() << "\n";

        return report.empty() ? 0 : 2;
    } catch (const std::exception& ex) {
        err << stage << ": " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace tpi

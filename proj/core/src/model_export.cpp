#include "tpi/model_export.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

namespace tpi {

namespace {

std::string var_name(const IlpProblem& p, int var) {
    if (var < p.num_paths) return "P_" + std::to_string(var + 1);
    const int a = var - p.num_paths;
    const int t = a / p.num_remaining;
    const int r = a % p.num_remaining;
    return "A_" + std::to_string(t + 1) + "_" + std::to_string(r + 1);
}

std::string row_name(const Constraint& c) {
    switch (c.family) {
        case ConstraintFamily::validity:
            return "v_" + std::to_string(c.terminal + 1) + "_" + std::to_string(c.path + 1);
        case ConstraintFamily::unique_path:
            return "u_" + std::to_string(c.customer + 1);
        case ConstraintFamily::unique_terminal:
            return "w_" + std::to_string(c.remaining + 1);
    }
    return "row";
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string format_coefficient(const Rational& r) { return format_double(to_double(r)); }

void write_lp(const IlpProblem& p, std::ostream& os) {
    os << "\\ exported 0/1 model: " << p.num_paths << " path vars, " << p.num_assoc_vars()
       << " association vars\n";
    os << "Maximize\n obj:";
    int width = 5;
    auto emit_term = [&os, &width](const std::string& text) {
        if (width + static_cast<int>(text.size()) > 200) {
            os << "\n     ";
            width = 5;
        }
        os << text;
        width += static_cast<int>(text.size());
    };
    if (p.num_vars() == 0) {
        os << " 0";
    } else {
        bool first = true;
        for (int k = 0; k < p.num_paths; ++k) {
            emit_term(std::string(first ? " " : " + ") + var_name(p, k));
            first = false;
        }
        if (p.lambda != Rational(0)) {
            const std::string coef = format_coefficient(p.lambda);
            for (int a = 0; a < p.num_assoc_vars(); ++a)
                emit_term(" - " + coef + " " + var_name(p, p.num_paths + a));
        }
    }
    os << "\nSubject To\n";
    for (const Constraint& c : p.constraints) {
        if (c.trivial) continue;
        os << ' ' << row_name(c) << ':';
        width = static_cast<int>(row_name(c).size()) + 2;
        bool first = true;
        for (const auto& [var, coef] : c.terms) {
            std::string text;
            if (coef < 0)
                text = " - ";
            else
                text = first ? " " : " + ";
            const long long mag = coef < 0 ? -coef : coef;
            if (mag != 1) text += std::to_string(mag) + " ";
            text += var_name(p, var);
            emit_term(text);
            first = false;
        }
        os << " <= " << c.rhs << '\n';
    }
    os << "Binary\n";
    for (int v = 0; v < p.num_vars(); ++v) os << ' ' << var_name(p, v) << '\n';
    os << "End\n";
}

namespace {

void mps_entry(std::ostream& os, const std::string& column, const std::string& row, const std::string& value) {
    os << "    ";
    os << column;
    for (std::size_t i = column.size(); i < 10; ++i) os << ' ';
    os << row;
    for (std::size_t i = row.size(); i < 10; ++i) os << ' ';
    os << value << '\n';
}

}  // namespace

void write_mps(const IlpProblem& p, std::ostream& os) {
    os << "NAME          TPI_MODEL\n";
    os << "ROWS\n";
    os << " N  obj\n";
    for (const Constraint& c : p.constraints) {
        if (c.trivial) continue;
        os << " L  " << row_name(c) << '\n';
    }

    // column-major entries: objective first, then every non-trivial row the
    // variable appears in
    std::vector<std::vector<std::pair<std::string, long long>>> column_rows(p.num_vars());
    for (const Constraint& c : p.constraints) {
        if (c.trivial) continue;
        const std::string name = row_name(c);
        for (const auto& [var, coef] : c.terms) column_rows[var].emplace_back(name, coef);
    }

    os << "COLUMNS\n";
    os << "    MARKER    M1        'MARKER'  'INTORG'\n";
    for (int v = 0; v < p.num_vars(); ++v) {
        const std::string name = var_name(p, v);
        const Rational obj = p.objective_coefficient(v);
        mps_entry(os, name, "obj", format_coefficient(obj));
        for (const auto& [row, coef] : column_rows[v]) mps_entry(os, name, row, std::to_string(coef));
    }
    os << "    MARKER    M2        'MARKER'  'INTEND'\n";

    os << "RHS\n";
    for (const Constraint& c : p.constraints) {
        if (c.trivial || c.rhs == 0) continue;
        mps_entry(os, "RHS", row_name(c), std::to_string(c.rhs));
    }

    os << "BOUNDS\n";
    for (int v = 0; v < p.num_vars(); ++v) {
        const std::string name = var_name(p, v);
        os << " BV BND       " << name << '\n';
    }
    os << "ENDATA\n";
}

}  // namespace tpi

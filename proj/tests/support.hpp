#pragma once

// Shared test utilities: a reader for the emitted .alp row format and a
// tiny process runner for the CLI end-to-end tests.

#include "alpfeas/model.hpp"
#include "alpfeas/rational.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

/// Parses the compact polynomial text KPoly::str produces ("K+2",
/// "2*K", "3*K^2-1/2", "5").
inline alpfeas::KPoly parse_poly(const std::string& text) {
    using alpfeas::KPoly;
    using alpfeas::Rational;
    KPoly out;
    size_t i = 0;
    int sign = 1;
    while (i < text.size()) {
        if (text[i] == ' ') { ++i; continue; }
        if (text[i] == '+') { sign = 1; ++i; continue; }
        if (text[i] == '-') { sign = -1; ++i; continue; }
        Rational coeff(1);
        bool have_num = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            coeff = Rational::from_string(text.substr(i, j - i));
            have_num = true;
            i = j;
            if (i < text.size() && text[i] == '*') ++i;
        }
        int deg = 0;
        if (i < text.size() && text[i] == 'K') {
            deg = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                deg = std::stoi(text.substr(i, j - i));
                i = j;
            }
        } else if (!have_num) {
            throw std::runtime_error("bad poly text: " + text);
        }
        if (i < text.size() && text[i] != ' ' && text[i] != '+' && text[i] != '-')
            throw std::runtime_error("bad poly text: " + text);
        std::vector<Rational> cs(static_cast<size_t>(deg) + 1, Rational(0));
        cs[static_cast<size_t>(deg)] = sign < 0 ? -coeff : coeff;
        out += KPoly::from_coeffs(cs);
        sign = 1;
    }
    return out;
}

/// Parses the row language emitted by render_alp: terms of the shapes
/// "x", "3 x", "1/2 x", "K x", "2*K x", "(K+2) x" and bare constants,
/// joined by +/-, ending in "<= 0". Header comments are skipped.
inline std::vector<alpfeas::AlpConstraint> read_alp_rows(const std::string& text) {
    using alpfeas::KPoly;
    using alpfeas::Rational;
    std::vector<alpfeas::AlpConstraint> rows;
    std::istringstream in(text);
    std::string line;
    auto is_coeff_token = [](const std::string& tok) {
        if (tok.empty()) return false;
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) return true;
        return tok == "K" || tok.rfind("K^", 0) == 0;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const size_t relpos = line.find("<=");
        if (relpos == std::string::npos) throw std::runtime_error("alp row without <=: " + line);
        const std::string lhs = line.substr(0, relpos);
        const std::string rhs = line.substr(relpos + 2);
        if (rhs.find_first_not_of(" 0\r") != std::string::npos)
            throw std::runtime_error("alp row rhs is not 0: " + line);

        alpfeas::AlpConstraint row;
        KPoly constant;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < lhs.size() && (lhs[i] == ' ' || lhs[i] == '\t' || lhs[i] == '\r')) ++i;
        };
        auto next_token = [&]() -> std::string {
            skip_ws();
            if (i >= lhs.size()) return {};
            if (lhs[i] == '+' || lhs[i] == '-') return lhs.substr(i++, 1);
            if (lhs[i] == '(') {
                const size_t close = lhs.find(')', i);
                if (close == std::string::npos) throw std::runtime_error("unbalanced ( in: " + line);
                std::string tok = lhs.substr(i, close - i + 1);
                i = close + 1;
                return tok;
            }
            size_t j = i;
            while (j < lhs.size() && lhs[j] != ' ' && lhs[j] != '+' && lhs[j] != '-' && lhs[j] != '\r') ++j;
            std::string tok = lhs.substr(i, j - i);
            i = j;
            return tok;
        };

        int sign = 1;
        for (std::string tok = next_token(); !tok.empty(); tok = next_token()) {
            if (tok == "+") { sign = 1; continue; }
            if (tok == "-") { sign = -1; continue; }
            KPoly coeff(Rational(1));
            bool have_coeff = false;
            std::string var;
            if (tok.front() == '(') {
                coeff = parse_poly(tok.substr(1, tok.size() - 2));
                have_coeff = true;
            } else if (is_coeff_token(tok)) {
                coeff = parse_poly(tok);
                have_coeff = true;
            } else {
                var = tok;
            }
            if (have_coeff) {
                // a variable may follow the coefficient
                const size_t save = i;
                std::string nxt = next_token();
                if (!nxt.empty() && nxt != "+" && nxt != "-" && nxt.front() != '(' && !is_coeff_token(nxt)) {
                    var = nxt;
                } else {
                    i = save;
                }
            }
            if (sign < 0) coeff = -coeff;
            if (var.empty()) {
                constant += coeff;
            } else {
                auto [it, inserted] = row.coeffs.emplace(var, coeff);
                if (!inserted) it->second += coeff;
            }
            sign = 1;
        }
        row.rhs = -constant; // rows arrive as "... <= 0" with the constant on the left
        for (auto it = row.coeffs.begin(); it != row.coeffs.end();) {
            if (it->second.is_zero()) it = row.coeffs.erase(it);
            else ++it;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr combined
};

/// Runs a shell command, capturing combined output.
inline RunResult run_command(const std::string& command) {
    RunResult res;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = (status >= 256) ? status / 256 : status; // WEXITSTATUS without <sys/wait.h>
    return res;
}

} // namespace testsupport

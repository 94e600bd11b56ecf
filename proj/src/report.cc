// Copyright 2026 The frustgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "frustgraph/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "frustgraph/error.h"
#include "frustgraph/stabilizer.h"
#include "frustgraph/symplectic.h"

namespace frustgraph {

using Json = nlohmann::ordered_json;

std::string_view document_mode_name(DocumentMode mode) {
    switch (mode) {
        case DocumentMode::Group:
            return "group";
        case DocumentMode::Stabilizer:
            return "stabilizer";
        case DocumentMode::Unspecified:
            break;
    }
    return "unspecified";
}

namespace {

struct Token {
    std::string_view text;
    /// 1-based.
    size_t column;
};

[[noreturn]] void fail(ErrorCode code, size_t line, size_t column, const std::string &what) {
    throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> split_tokens(std::string_view text, size_t first_column) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            i++;
            continue;
        }
        size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') {
            i++;
        }
        out.push_back({text.substr(start, i - start), first_column + start});
    }
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// Parses digits at text[pos...]; advances pos. Values that overflow are
/// reported as out of range.
uint64_t read_exponent(std::string_view text, size_t &pos, uint64_t limit, size_t line, size_t column) {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        pos++;
    }
    if (pos == start) {
        fail(ErrorCode::ParseError, line, column + start, "expected an exponent after '^'");
    }
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || value >= limit) {
        fail(
            ErrorCode::ExponentOutOfRange, line, column + start,
            "exponent " + std::string(text.substr(start, pos - start)) + " is outside [0, " + std::to_string(limit) +
                ")");
    }
    return value;
}

/// One of I, X, Z, X^a, Z^b, X^aZ^b (plus the XZ shorthands).
std::pair<uint32_t, uint32_t> parse_site_token(const Token &tok, uint32_t d, size_t line) {
    std::string_view t = tok.text;
    if (t == "I") {
        return {0, 0};
    }
    size_t pos = 0;
    uint32_t a = 0;
    uint32_t b = 0;
    bool any = false;
    if (pos < t.size() && t[pos] == 'X') {
        pos++;
        any = true;
        a = 1;
        if (pos < t.size() && t[pos] == '^') {
            pos++;
            a = (uint32_t)read_exponent(t, pos, d, line, tok.column);
        }
    }
    if (pos < t.size() && t[pos] == 'Z') {
        pos++;
        any = true;
        b = 1;
        if (pos < t.size() && t[pos] == '^') {
            pos++;
            b = (uint32_t)read_exponent(t, pos, d, line, tok.column);
        }
    }
    if (!any || pos != t.size()) {
        fail(ErrorCode::ParseError, line, tok.column + (any ? pos : 0), "unexpected site token '" + std::string(t) + "'");
    }
    return {a, b};
}

PauliOperator parse_generator(const std::vector<Token> &tokens, uint32_t d, size_t n_sites, size_t line,
                              size_t end_column, const std::string &label) {
    size_t first = 0;
    uint32_t phase = 0;
    if (!tokens.empty() && tokens[0].text.starts_with("w")) {
        const Token &tok = tokens[0];
        if (tok.text.size() < 2 || tok.text[1] != '^') {
            fail(ErrorCode::ParseError, line, tok.column, "phase token must look like w^<j>");
        }
        size_t pos = 2;
        phase = (uint32_t)read_exponent(tok.text, pos, phase_modulus(d), line, tok.column);
        if (pos != tok.text.size()) {
            fail(ErrorCode::ParseError, line, tok.column + pos, "unexpected characters after phase exponent");
        }
        first = 1;
    }
    const size_t count = tokens.size() - first;
    if (count != n_sites) {
        fail(
            ErrorCode::DimensionMismatch, line, count < n_sites ? end_column : tokens[first + n_sites].column,
            label + " has " + std::to_string(count) + " site tokens, expected " + std::to_string(n_sites));
    }
    ZdVector x(n_sites);
    ZdVector z(n_sites);
    for (size_t s = 0; s < n_sites; s++) {
        auto [a, b] = parse_site_token(tokens[first + s], d, line);
        x[s] = a;
        z[s] = b;
    }
    return PauliOperator(d, std::move(x), std::move(z), phase);
}

uint64_t parse_header_int(const Token &tok, std::string_view value, size_t value_offset, size_t line) {
    uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (!all_digits(value) || ec != std::errc() || out > UINT32_MAX) {
        fail(ErrorCode::ParseError, line, tok.column + value_offset, "expected a non-negative integer");
    }
    return out;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
    InputDocument doc;
    bool header_seen = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line, 1);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (!header_seen) {
            bool have_d = false;
            bool have_n = false;
            bool have_mode = false;
            for (const auto &tok : tokens) {
                size_t eq = tok.text.find('=');
                if (eq == std::string_view::npos) {
                    fail(ErrorCode::ParseError, line_no, tok.column, "expected key=value in header");
                }
                std::string_view key = tok.text.substr(0, eq);
                std::string_view value = tok.text.substr(eq + 1);
                if (key == "d" && !have_d) {
                    uint64_t d = parse_header_int(tok, value, eq + 1, line_no);
                    require_prime((uint32_t)d);
                    doc.d = (uint32_t)d;
                    have_d = true;
                } else if (key == "n" && !have_n) {
                    doc.n_sites = parse_header_int(tok, value, eq + 1, line_no);
                    if (doc.n_sites == 0) {
                        fail(ErrorCode::ParseError, line_no, tok.column + eq + 1, "n must be at least 1");
                    }
                    have_n = true;
                } else if (key == "mode" && !have_mode) {
                    if (value == "group") {
                        doc.mode = DocumentMode::Group;
                    } else if (value == "stabilizer") {
                        doc.mode = DocumentMode::Stabilizer;
                    } else {
                        fail(ErrorCode::ParseError, line_no, tok.column + eq + 1, "mode must be group or stabilizer");
                    }
                    have_mode = true;
                } else {
                    fail(ErrorCode::ParseError, line_no, tok.column, "unknown or repeated header key '" +
                                                                         std::string(key) + "'");
                }
            }
            if (!have_d || !have_n) {
                fail(ErrorCode::ParseError, line_no, 1, "header must set both d and n");
            }
            header_seen = true;
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            fail(ErrorCode::ParseError, line_no, tokens[0].column, "expected 'g<idx>:' before the site tokens");
        }
        auto label_tokens = split_tokens(line.substr(0, colon), 1);
        const std::string expected = "g" + std::to_string(doc.generators.size() + 1);
        if (label_tokens.size() != 1 || label_tokens[0].text != expected) {
            fail(
                ErrorCode::ParseError, line_no, label_tokens.empty() ? colon + 1 : label_tokens[0].column,
                "expected generator label '" + expected + "'");
        }
        auto body = split_tokens(line.substr(colon + 1), colon + 2);
        doc.generators.push_back(parse_generator(body, doc.d, doc.n_sites, line_no, line.size() + 1, expected));
    }
    if (!header_seen) {
        fail(ErrorCode::ParseError, line_no, 1, "missing header 'd=<int> n=<int>'");
    }
    if (doc.generators.empty()) {
        fail(ErrorCode::ParseError, line_no, 1, "document has no generators");
    }
    return doc;
}

PauliOperator parse_pauli(std::string_view tokens, uint32_t d, size_t n_sites) {
    require_prime(d);
    return parse_generator(split_tokens(tokens, 1), d, n_sites, 1, tokens.size() + 1, "operator");
}

std::string format_document(const InputDocument &doc) {
    std::string out = "d=" + std::to_string(doc.d) + " n=" + std::to_string(doc.n_sites);
    if (doc.mode != DocumentMode::Unspecified) {
        out += " mode=" + std::string(document_mode_name(doc.mode));
    }
    out += '\n';
    for (size_t i = 0; i < doc.generators.size(); i++) {
        out += "g" + std::to_string(i + 1) + ": " + doc.generators[i].str() + '\n';
    }
    return out;
}

InputDocument builtin_document(std::string_view name, uint32_t d, size_t n_sites) {
    Stabilizer s = builtin_code(name, d, n_sites);
    return {s.d(), s.n_sites(), s.generators(), DocumentMode::Stabilizer};
}

Command parse_command(std::string_view name) {
    if (name == "analyze") {
        return Command::Analyze;
    }
    if (name == "canonical") {
        return Command::Canonical;
    }
    if (name == "entanglement") {
        return Command::Entanglement;
    }
    if (name == "verify") {
        return Command::Verify;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command cmd) {
    switch (cmd) {
        case Command::Analyze:
            return "analyze";
        case Command::Canonical:
            return "canonical";
        case Command::Entanglement:
            return "entanglement";
        case Command::Verify:
            return "verify";
    }
    return "unknown";
}

std::string fnv1a_hex(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

std::string format_real(double value) {
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }
    if (value == 0) {
        value = 0;  // drops the sign of -0
    }
    // The exponent of the value after rounding to 12 significant digits.
    char sci[32];
    std::snprintf(sci, sizeof(sci), "%.11e", value);
    int exponent = std::atoi(std::strchr(sci, 'e') + 1);
    int decimals = std::max(0, 11 - exponent);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

namespace {

Json matrix_json(const GFMatrix &m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json rational_json(const Rational &q) {
    Json out;
    out["num"] = q.num;
    out["den"] = q.den;
    out["real"] = format_real(q.real());
    return out;
}

Json generators_json(const std::vector<PauliOperator> &gens) {
    Json out = Json::array();
    for (const auto &g : gens) {
        out.push_back(g.str());
    }
    return out;
}

const InputDocument &require_document(const std::optional<InputDocument> &doc, Command cmd) {
    if (!doc) {
        throw Error(ErrorCode::InvalidConfig, std::string(command_name(cmd)) + " needs an input file or --builtin");
    }
    return *doc;
}

uint64_t dense_dim(uint32_t d, size_t n_sites) {
    try {
        return checked_pow(d, n_sites);
    } catch (const Error &) {
        return UINT64_MAX;
    }
}

Json analyze(const InputDocument &doc, const CommandFlags &flags) {
    GroupSpec spec = GroupSpec::from_generators(doc.d, doc.n_sites, doc.generators);
    const size_t r = rank(spec.gamma());
    Json out;
    out["d"] = doc.d;
    out["n_sites"] = doc.n_sites;
    out["k"] = spec.k();
    out["mode"] = std::string(document_mode_name(doc.mode));
    out["generators"] = generators_json(doc.generators);
    out["gamma"] = matrix_json(spec.gamma());
    out["rank"] = r;
    out["nullity"] = spec.k() - r;
    out["central_subgroup_order"] = checked_pow(doc.d, spec.k() - r);
    out["clique_number"] = clique_number(spec);
    out["sos_bound"] = sos_bound(spec);
    out["sum_bound"] = doc.d == 2 ? Json(nullptr) : Json(format_real(sum_bound(spec)));

    const uint64_t vertices = dense_dim(doc.d, spec.k());
    if (vertices <= flags.cap_vertices) {
        CommutationGraph g = commutation_graph(spec, flags.cap_vertices);
        Json graph;
        graph["vertices"] = g.vertex_count();
        graph["edges"] = g.edge_count();
        graph["clique_number_bruteforce"] = clique_number_bruteforce(g, std::max(flags.cap_vertices, kCliqueVertexCap));
        graph["chromatic_number"] = flags.chromatic ? Json(chromatic_number_exact(g)) : Json(nullptr);
        out["commutation_graph"] = std::move(graph);
    } else {
        if (flags.chromatic) {
            throw Error(
                ErrorCode::TooLarge, "commutation graph has " + std::to_string(vertices) +
                                         " vertices, above --cap-vertices " + std::to_string(flags.cap_vertices));
        }
        out["commutation_graph"] = nullptr;
    }
    return out;
}

Json canonical(const InputDocument &doc) {
    GroupSpec spec = GroupSpec::from_generators(doc.d, doc.n_sites, doc.generators);
    CanonicalForm f = canonical_form(spec.gamma());
    BlockReduction b = block_reduce(spec.gamma());
    Json out;
    out["d"] = doc.d;
    out["k"] = spec.k();
    out["gamma"] = matrix_json(spec.gamma());
    out["O"] = matrix_json(f.transform);
    out["blocks"] = f.blocks;
    out["residual_dim"] = f.residual_dim;
    out["normal_form"] = matrix_json(f.transform.transpose() * spec.gamma() * f.transform);
    Json reduction;
    reduction["transform"] = matrix_json(b.transform);
    reduction["zero_block"] = b.zero_block;
    out["block_reduction"] = std::move(reduction);
    return out;
}

Stabilizer validated_stabilizer(const InputDocument &doc) {
    if (doc.mode == DocumentMode::Group) {
        throw Error(ErrorCode::InvalidConfig, "document is tagged mode=group; entanglement needs a stabilizer");
    }
    Stabilizer s(doc.d, doc.n_sites, doc.generators);
    validate(s);
    return s;
}

Json entanglement(const InputDocument &doc, const CommandFlags &flags) {
    Stabilizer s = validated_stabilizer(doc);
    Json out;
    out["d"] = doc.d;
    out["n_sites"] = doc.n_sites;
    out["k"] = s.k();
    out["generators"] = generators_json(doc.generators);
    Json parts = Json::array();
    if (doc.n_sites < 2) {
        out["bipartitions"] = std::move(parts);
        out["is_gme"] = nullptr;
        out["ggm"] = nullptr;
        return out;
    }
    bool gme = true;
    for (const auto &side : enumerate_bipartitions(doc.n_sites)) {
        BipartitionReport rep = gm_measure(s, side);
        gme = gme && rep.rank > 0;
        Json part;
        part["side"] = side.indices();
        part["complement"] = side.complement(doc.n_sites).indices();
        part["rank"] = rep.rank;
        part["gamma"] = matrix_json(rep.gamma);
        part["gm"] = rational_json(rep.gm);
        part["overlap"] =
            flags.overlap ? Json(format_real(max_product_overlap(s, side, flags.optimizer))) : Json(nullptr);
        parts.push_back(std::move(part));
    }
    out["bipartitions"] = std::move(parts);
    out["is_gme"] = gme;
    out["ggm"] = rational_json(ggm_measure(s));
    return out;
}

enum class Status { Pass, Fail, Skipped };

Json check_json(std::string name, Status status, double tolerance, std::optional<double> deviation, Json details) {
    Json out;
    out["name"] = std::move(name);
    out["status"] = status == Status::Pass ? "pass" : (status == Status::Fail ? "fail" : "skipped");
    out["tolerance"] = format_real(tolerance);
    out["deviation"] = deviation ? Json(format_real(*deviation)) : Json(nullptr);
    out["details"] = std::move(details);
    return out;
}

Json skipped(std::string name, double tolerance, const std::string &reason) {
    Json details;
    details["reason"] = reason;
    return check_json(std::move(name), Status::Skipped, tolerance, std::nullopt, std::move(details));
}

Status status_of(bool ok) {
    return ok ? Status::Pass : Status::Fail;
}

Json swap_check(uint32_t d) {
    double dev = verify_swap_identity(d);
    Json details;
    details["d"] = d;
    return check_json("swap_identity", status_of(dev < kExactTol), kExactTol, dev, std::move(details));
}

std::vector<Json> lagrange_checks(uint32_t d, const OptimizerConfig &cfg) {
    const double root_d = std::sqrt((double)d);
    double value = lagrange_extremum(d, cfg);
    double expected = (1 + 1 / root_d) / 2;
    Json details;
    details["d"] = d;
    details["value"] = format_real(value);
    details["expected"] = format_real(expected);
    double dev = std::abs(value - expected);
    std::vector<Json> out{
        check_json("lagrange_extremum", status_of(dev < kOverlapTol), kOverlapTol, dev, std::move(details))};

    // sum_{i,j} <theta| X^i Z^j |theta> against (d/2)(1 + sqrt d).
    StateVector theta = theta_state(d);
    Complex total{0, 0};
    for (uint32_t i = 0; i < d; i++) {
        for (uint32_t j = 0; j < d; j++) {
            total += expectation(PauliOperator(d, {i}, {j}), theta);
        }
    }
    double target = d / 2.0 * (1 + root_d);
    double theta_dev = std::abs(total - Complex(target, 0));
    Json theta_details;
    theta_details["d"] = d;
    theta_details["value"] = format_real(total.real());
    theta_details["expected"] = format_real(target);
    out.push_back(
        check_json("theta_state_sum", status_of(theta_dev < kBoundTol), kBoundTol, theta_dev, std::move(theta_details)));
    return out;
}

Json faithfulness_check(const InputDocument &doc) {
    const char *name = "faithfulness";
    if (dense_dim(doc.d, doc.n_sites) > kDensePauliDimCap) {
        return skipped(name, kExactTol, "dense dimension above " + std::to_string(kDensePauliDimCap));
    }
    double worst = 0;
    size_t pairs = 0;
    for (const auto &p : doc.generators) {
        DenseOperator mp = dense_pauli(p);
        DenseOperator acc = DenseOperator::identity(mp.dim());
        for (uint32_t t = 1; t <= doc.d; t++) {
            acc = acc * mp;
            worst = std::max(worst, dense_pauli(power(p, t)).max_abs_diff(acc));
        }
        for (const auto &q : doc.generators) {
            worst = std::max(worst, dense_pauli(p * q).max_abs_diff(mp * dense_pauli(q)));
            pairs++;
        }
    }
    Json details;
    details["products"] = pairs;
    details["powers"] = doc.generators.size() * doc.d;
    return check_json(name, status_of(worst < kExactTol), kExactTol, worst, std::move(details));
}

Json sos_check(const InputDocument &doc, const OptimizerConfig &cfg) {
    const char *name = "sos_bound";
    if (dense_dim(doc.d, doc.n_sites) > kDensePauliDimCap) {
        return skipped(name, kBoundTol, "dense dimension above " + std::to_string(kDensePauliDimCap));
    }
    GroupSpec spec = GroupSpec::from_generators(doc.d, doc.n_sites, doc.generators);
    if (spec.order() > 4096) {
        return skipped(name, kBoundTol, "group order above 4096");
    }
    SosResult r = max_sos(spec, cfg);
    double bound = (double)sos_bound(spec);
    double dev = std::max(std::abs(r.witness - bound), std::max(0.0, r.iterative - bound));
    Json details;
    details["bound"] = sos_bound(spec);
    details["witness"] = format_real(r.witness);
    details["iterative"] = format_real(r.iterative);
    return check_json(name, status_of(dev <= kBoundTol), kBoundTol, dev, std::move(details));
}

Json sum_check(const InputDocument &doc) {
    const char *name = "sum_bound";
    if (doc.d == 2) {
        return skipped(name, kBoundTol, "the sum bound needs an odd prime d");
    }
    if (dense_dim(doc.d, doc.n_sites) > kSumEigenDimCap) {
        return skipped(name, kBoundTol, "dense dimension above " + std::to_string(kSumEigenDimCap));
    }
    GroupSpec spec = GroupSpec::from_generators(doc.d, doc.n_sites, doc.generators);
    if (spec.order() > 4096) {
        return skipped(name, kBoundTol, "group order above 4096");
    }
    double lambda = max_sum_eigenvalue(spec);
    double bound = sum_bound(spec);
    double excess = std::max(0.0, lambda - bound);
    Json details;
    details["rank"] = rank(spec.gamma());
    details["lambda_max"] = format_real(lambda);
    details["bound"] = format_real(bound);
    return check_json(name, status_of(excess <= kBoundTol), kBoundTol, excess, std::move(details));
}

Json overlap_check(const InputDocument &doc, const OptimizerConfig &cfg) {
    const char *name = "product_overlap";
    if (doc.n_sites < 2) {
        return skipped(name, kOverlapTol, "no bipartitions on one site");
    }
    if (dense_dim(doc.d, doc.n_sites) > kOverlapDimCap) {
        return skipped(name, kOverlapTol, "dense dimension above " + std::to_string(kOverlapDimCap));
    }
    Stabilizer s = validated_stabilizer(doc);
    double worst = 0;
    Json parts = Json::array();
    for (const auto &side : enumerate_bipartitions(doc.n_sites)) {
        BipartitionReport rep = gm_measure(s, side);
        double overlap = max_product_overlap(s, side, cfg);
        double expected = 1 - rep.gm.real();
        worst = std::max(worst, std::abs(overlap - expected));
        Json part;
        part["side"] = side.indices();
        part["overlap"] = format_real(overlap);
        part["expected"] = format_real(expected);
        parts.push_back(std::move(part));
    }
    Json details;
    details["bipartitions"] = std::move(parts);
    return check_json(name, status_of(worst < kOverlapTol), kOverlapTol, worst, std::move(details));
}

Json verify(const std::optional<InputDocument> &doc, const CommandFlags &flags, bool &passed) {
    Json checks = Json::array();
    if (flags.swap || flags.lagrange) {
        if (flags.check_d == 0) {
            throw Error(ErrorCode::InvalidConfig, "--swap and --lagrange need --d");
        }
        if (flags.swap) {
            checks.push_back(swap_check(flags.check_d));
        }
        if (flags.lagrange) {
            for (auto &c : lagrange_checks(flags.check_d, flags.optimizer)) {
                checks.push_back(std::move(c));
            }
        }
    } else {
        const InputDocument &d = require_document(doc, Command::Verify);
        checks.push_back(faithfulness_check(d));
        checks.push_back(sos_check(d, flags.optimizer));
        checks.push_back(sum_check(d));
        if (d.mode == DocumentMode::Stabilizer) {
            checks.push_back(overlap_check(d, flags.optimizer));
        }
    }
    passed = std::none_of(checks.begin(), checks.end(), [](const Json &c) { return c["status"] == "fail"; });
    Json out;
    out["seed"] = flags.optimizer.seed;
    out["restarts"] = flags.optimizer.restarts;
    out["checks"] = std::move(checks);
    out["pass"] = passed;
    return out;
}

}  // namespace

Report run_command(Command cmd, const std::optional<InputDocument> &doc, const CommandFlags &flags) {
    flags.optimizer.check();
    Report r;
    r.command = std::string(command_name(cmd));
    r.version = std::string(kVersion);
    r.input_digest = fnv1a_hex(doc ? format_document(*doc) : std::string());
    switch (cmd) {
        case Command::Analyze:
            r.result = analyze(require_document(doc, cmd), flags);
            break;
        case Command::Canonical:
            r.result = canonical(require_document(doc, cmd));
            break;
        case Command::Entanglement:
            r.result = entanglement(require_document(doc, cmd), flags);
            break;
        case Command::Verify:
            r.result = verify(doc, flags, r.passed);
            break;
    }
    return r;
}

ReportFormat parse_format(std::string_view name) {
    if (name == "text") {
        return ReportFormat::Text;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown format '" + std::string(name) + "'");
}

namespace {

bool is_rational(const Json &v) {
    return v.is_object() && v.size() == 3 && v.contains("num") && v.contains("den") && v.contains("real");
}

std::string scalar_text(const Json &v) {
    if (v.is_null()) {
        return "-";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (is_rational(v)) {
        return v["num"].dump() + "/" + v["den"].dump() + " (" + v["real"].get<std::string>() + ")";
    }
    return v.dump();
}

bool is_scalar(const Json &v) {
    return !v.is_structured() || is_rational(v);
}

void render(const std::string &key, const Json &v, size_t indent, std::ostringstream &out);

void render_children(const Json &obj, size_t indent, std::ostringstream &out) {
    for (const auto &[k, child] : obj.items()) {
        render(k, child, indent, out);
    }
}

void render(const std::string &key, const Json &v, size_t indent, std::ostringstream &out) {
    const std::string pad(indent, ' ');
    if (is_scalar(v)) {
        out << pad << key << ": " << scalar_text(v) << '\n';
        return;
    }
    if (v.is_object()) {
        out << pad << key << ":\n";
        render_children(v, indent + 2, out);
        return;
    }
    if (v.empty()) {
        out << pad << key << ": []\n";
        return;
    }
    if (std::all_of(v.begin(), v.end(), is_scalar)) {
        out << pad << key << ": [";
        for (size_t i = 0; i < v.size(); i++) {
            out << (i ? ", " : "") << scalar_text(v[i]);
        }
        out << "]\n";
        return;
    }
    out << pad << key << ":\n";
    for (const auto &item : v) {
        if (item.is_array() && std::all_of(item.begin(), item.end(), is_scalar)) {
            out << pad << "  ";
            for (size_t i = 0; i < item.size(); i++) {
                out << (i ? " " : "") << scalar_text(item[i]);
            }
            out << '\n';
        } else if (item.is_object()) {
            std::ostringstream body;
            render_children(item, indent + 4, body);
            std::string text = body.str();
            if (text.size() >= indent + 4) {
                text.replace(indent + 2, 2, "- ");
            }
            out << text;
        } else {
            out << pad << "  - " << item.dump() << '\n';
        }
    }
}

}  // namespace

std::string emit_report(const Report &r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        Json j;
        j["schema"] = std::string(kReportSchema);
        j["command"] = r.command;
        j["version"] = r.version;
        j["input_digest"] = r.input_digest;
        j["result"] = r.result;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "frustgraph " << r.version << " " << r.command << '\n';
    out << "input_digest: " << r.input_digest << '\n';
    render_children(r.result, 0, out);
    return out.str();
}

}  // namespace frustgraph

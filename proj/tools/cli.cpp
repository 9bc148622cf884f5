#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylkac/cartan.hpp"
#include "weylkac/cgraph.hpp"
#include "weylkac/errors.hpp"
#include "weylkac/factor.hpp"
#include "weylkac/series.hpp"
#include "weylkac/weyl.hpp"

namespace weylkac::cli {

namespace {

int exit_code_for(errc code) {
    switch (code) {
    case errc::truncation_insufficient:
    case errc::not_a_product_of_numerators:
    case errc::node_cap_exceeded:
    case errc::cap_exceeded:
    case errc::factor_count_mismatch:
        return 3;
    case errc::non_integral_coefficient:
    case errc::non_integral_result:
        return 4;
    default:
        return 2;
    }
}

struct GcmFile {
    CartanMatrix matrix;
    std::vector<std::string> labels;
};

GcmFile load_gcm(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(errc::invalid_input, "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::invalid_input, "bad JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
        throw Error(errc::invalid_input, "'" + path + "' needs a \"matrix\" array");

    std::vector<std::vector<std::int64_t>> entries;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array())
            throw Error(errc::invalid_input, "matrix rows must be arrays");
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw Error(errc::invalid_input, "matrix entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        entries.push_back(std::move(r));
    }
    CartanMatrix A = validate_gcm(entries);

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw Error(errc::invalid_input, "\"labels\" must be an array of strings");
        for (const auto& s : doc["labels"]) {
            if (!s.is_string())
                throw Error(errc::invalid_input, "\"labels\" must be an array of strings");
            labels.push_back(s.get<std::string>());
        }
        if (static_cast<int>(labels.size()) != A.rank())
            throw Error(errc::invalid_input, "label count does not match the rank");
    } else {
        for (int i = 0; i < A.rank(); ++i) labels.push_back(std::to_string(i));
    }
    return GcmFile{std::move(A), std::move(labels)};
}

// `cvalue` accepts either a GCM JSON file or a plain graph file; JSON is
// recognized by a leading '{'.
DynkinGraph load_graph_or_gcm(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(errc::invalid_input, "cannot open '" + path + "'");
    char first = 0;
    in >> std::ws;
    if (!in.get(first))
        throw Error(errc::invalid_input, "'" + path + "' is empty");
    in.unget();
    if (first == '{') {
        in.close();
        return dynkin_graph(load_gcm(path).matrix);
    }
    return read_graph_file(in);
}

std::int64_t parse_coord(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(errc::invalid_input, "bad weight coordinate '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        throw Error(errc::invalid_input, "bad weight coordinate '" + tok + "'");
    }
}

DominantWeight parse_weight(const std::string& text, int rank) {
    std::vector<std::int64_t> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        coords.push_back(parse_coord(
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(coords.size()) != rank)
        throw Error(errc::invalid_input, "weight '" + text + "' does not have rank " +
                                             std::to_string(rank));
    return DominantWeight(std::move(coords));
}

WeightMultiset parse_weight_list(const std::string& text, int rank) {
    WeightMultiset out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        out.insert(parse_weight(
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos), rank));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

std::string weight_string(const DominantWeight& w) {
    std::string s = "(";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    s += ')';
    return s;
}

void print_weights(std::ostream& out, const WeightMultiset& weights) {
    for (auto it = weights.begin(); it != weights.end();) {
        auto count = weights.count(*it);
        out << weight_string(*it) << " x" << count << "\n";
        std::advance(it, static_cast<std::ptrdiff_t>(count));
    }
}

void emit_series(const TruncatedSeries& s, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        write_series(out, s);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw Error(errc::invalid_input, "cannot write '" + out_path + "'");
    write_series(file, s);
}

TruncatedSeries load_series(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::invalid_input, "cannot open '" + path + "'");
    return read_series(in);
}

std::int64_t weights_degree_sum(const WeightMultiset& weights) {
    std::int64_t sum = 0;
    for (const auto& w : weights) sum += deg_lambda(w);
    return sum;
}

// --- subcommands -----------------------------------------------------------

int cmd_info(const std::string& gcm_path, std::ostream& out) {
    GcmFile gcm = load_gcm(gcm_path);
    const CartanMatrix& A = gcm.matrix;
    out << "rank: " << A.rank() << "\n";
    out << "labels:";
    for (const auto& s : gcm.labels) out << ' ' << s;
    out << "\n";
    out << "symmetrizer:";
    for (const auto& d : A.symmetrizer()) out << ' ' << rational_to_string(d);
    out << "\n";
    DynkinGraph g = dynkin_graph(A);
    out << "edges:";
    if (g.edge_count() == 0) out << " none";
    for (auto [i, j] : g.edges())
        out << ' ' << gcm.labels[static_cast<std::size_t>(i)] << '-'
            << gcm.labels[static_cast<std::size_t>(j)];
    out << "\n";
    out << "connected: " << (g.connected() ? "yes" : "no") << "\n";
    out << "type: "
        << (g.connected() ? algebra_type_name(classify(A)) : "decomposable") << "\n";
    return 0;
}

int cmd_cvalue(const std::string& path, const std::string& method, bool table, std::ostream& out,
               std::ostream& err) {
    DynkinGraph g = load_graph_or_gcm(path);
    std::optional<long long> direct, dc;
    if (method == "direct" || method == "both") direct = c_direct(g);
    if (method == "dc" || method == "both") dc = c_dc(g);
    if (direct) out << "c = " << *direct << "\n";
    if (dc) out << "c = " << *dc << "\n";
    if (table)
        for (int k = 1; k <= g.vertex_count(); ++k)
            out << "c_" << k << " = " << count_k_partitions(g, k) << "\n";
    if (direct && dc && *direct != *dc) {
        err << "error: method mismatch: direct " << *direct << " vs deletion-contraction " << *dc
            << "\n";
        return 4;
    }
    return 0;
}

int cmd_multiplicity(const std::string& gcm_path, std::ostream& out, std::ostream& err) {
    CartanMatrix A = load_gcm(gcm_path).matrix;
    std::int64_t mult = mult_sum_simple_roots(A);
    long long c = c_dc(dynkin_graph(A));
    out << "mult = " << mult << "\n";
    out << "c = " << c << "\n";
    if (mult != c) {
        err << "error: multiplicity " << mult << " disagrees with c(G) = " << c << "\n";
        return 4;
    }
    return 0;
}

int cmd_verify(const std::string& gcm_path, const std::string& weight, std::int64_t degree,
               bool degree_given, std::ostream& out) {
    CartanMatrix A = load_gcm(gcm_path).matrix;
    DominantWeight lambda = parse_weight(weight, A.rank());
    if (!degree_given) degree = deg_lambda(lambda);

    auto offsets = verify_offset_laws(A, lambda, degree);
    LeadingTermReport leading = verify_leading_term(A, lambda, degree);

    for (const auto& v : offsets) out << "violation: " << v << "\n";
    if (offsets.empty()) out << "offsets: ok\n";
    for (const auto& v : leading.violations) out << "violation: " << v << "\n";
    if (leading.violations.empty()) out << "leading-term: ok\n";
    out << "c(G) = " << rational_to_string(leading.coefficient) << "\n";
    return (offsets.empty() && leading.violations.empty()) ? 0 : 4;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl-Kac numerators, characters, c(G), and numerator factorization"};
    app.name("weylkac");
    app.require_subcommand(1);

    std::string gcm_path, graph_path, weight, weights, series_path, out_path;
    std::string method = "both";
    std::int64_t degree = 0;
    bool table = false;

    CLI::App* info = app.add_subcommand("info", "Rank, symmetrizer, graph, and type of a GCM");
    info->add_option("gcm", gcm_path, "GCM JSON file")->required();

    CLI::App* cvalue = app.add_subcommand("cvalue", "The graph invariant c(G)");
    cvalue->add_option("input", graph_path, "GCM JSON file or graph file")->required();
    cvalue->add_option("--method", method, "direct, dc, or both")
        ->check(CLI::IsMember({"direct", "dc", "both"}));
    cvalue->add_flag("--table", table, "also print the c_k table");

    CLI::App* numer = app.add_subcommand("numerator", "Truncated Weyl numerator U_lambda");
    numer->add_option("gcm", gcm_path, "GCM JSON file")->required();
    numer->add_option("--weight", weight, "comma-separated coroot pairings")->required();
    numer->add_option("--degree", degree, "truncation bound")->required();
    numer->add_option("-o,--output", out_path, "write the series file here instead of stdout");

    CLI::App* charc = app.add_subcommand("character", "Normalized character U_lambda / U_0");
    charc->add_option("gcm", gcm_path, "GCM JSON file")->required();
    charc->add_option("--weight", weight, "comma-separated coroot pairings")->required();
    charc->add_option("--degree", degree, "truncation bound")->required();
    charc->add_option("-o,--output", out_path, "write the series file here instead of stdout");

    CLI::App* multiplicity =
        app.add_subcommand("multiplicity", "Multiplicity of the sum of simple roots, with c(G) cross-check");
    multiplicity->add_option("gcm", gcm_path, "GCM JSON file")->required();

    CLI::App* factor = app.add_subcommand("factor", "Factor a series file into Weyl numerators");
    factor->add_option("gcm", gcm_path, "GCM JSON file")->required();
    factor->add_option("--series", series_path, "series file holding the product")->required();
    CLI::Option* factor_degree =
        factor->add_option("--degree", degree, "truncate to this bound first (default: the file's bound)");

    CLI::App* fw = app.add_subcommand("factor-weights",
                                      "Round trip: build a numerator product and factor it back");
    fw->add_option("gcm", gcm_path, "GCM JSON file")->required();
    fw->add_option("--weights", weights, "semicolon-separated weights, e.g. \"1,0;2,1\"")->required();
    CLI::Option* fw_degree =
        fw->add_option("--degree", degree, "truncation bound (default: sum of deg(lambda))");

    CLI::App* verify = app.add_subcommand("verify", "Check the reduced-word support and leading-term laws");
    verify->add_option("gcm", gcm_path, "GCM JSON file")->required();
    verify->add_option("--weight", weight, "comma-separated coroot pairings")->required();
    CLI::Option* verify_degree =
        verify->add_option("--degree", degree, "orbit degree bound (default: deg(lambda))");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (info->parsed()) return cmd_info(gcm_path, out);
        if (cvalue->parsed()) return cmd_cvalue(graph_path, method, table, out, err);
        if (numer->parsed()) {
            GcmFile gcm = load_gcm(gcm_path);
            emit_series(numerator(gcm.matrix, parse_weight(weight, gcm.matrix.rank()), degree),
                        out_path, out);
            return 0;
        }
        if (charc->parsed()) {
            GcmFile gcm = load_gcm(gcm_path);
            emit_series(character(gcm.matrix, parse_weight(weight, gcm.matrix.rank()), degree),
                        out_path, out);
            return 0;
        }
        if (multiplicity->parsed()) return cmd_multiplicity(gcm_path, out, err);
        if (factor->parsed()) {
            CartanMatrix A = load_gcm(gcm_path).matrix;
            TruncatedSeries p = load_series(series_path);
            std::int64_t d = factor_degree->count() ? degree : p.bound();
            print_weights(out, factorize_numerators(A, p, d));
            return 0;
        }
        if (fw->parsed()) {
            CartanMatrix A = load_gcm(gcm_path).matrix;
            WeightMultiset input = parse_weight_list(weights, A.rank());
            std::int64_t d = fw_degree->count() ? degree : weights_degree_sum(input);
            WeightMultiset recovered =
                factorize_numerators(A, numerator_product(A, input, d), d);
            print_weights(out, recovered);
            if (recovered != input) {
                err << "error: recovered multiset differs from the input\n";
                return 4;
            }
            return 0;
        }
        if (verify->parsed())
            return cmd_verify(gcm_path, weight, degree, verify_degree->count() > 0, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace weylkac::cli

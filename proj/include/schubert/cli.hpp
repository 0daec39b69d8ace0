#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubert/bruhat.hpp"
#include "schubert/classify.hpp"
#include "schubert/coroot.hpp"
#include "schubert/errors.hpp"
#include "schubert/moves.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/root_system.hpp"
#include "schubert/series.hpp"

namespace schubert::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace detail {

inline std::shared_ptr<const RootSystem> build_system(const std::string& type, int rank) {
    if (type.size() != 1) throw UnsupportedType("family must be a single letter A..G");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    return RootSystem::build(c, rank);
}

inline std::string resolve_format(const std::string& given, const std::string& dflt,
                                  const std::vector<std::string>& allowed) {
    std::string fmt = given.empty() ? dflt : given;
    if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end()) {
        throw Error("unsupported format '" + fmt + "' for this command");
    }
    return fmt;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string coords_text(const std::vector<long long>& coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    return out;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

// A classification record, either freshly computed or replayed from the
// cache file. Everything downstream formats from this one shape.
struct ClassifyRecord {
    std::vector<long long> lambda;
    std::vector<std::string> labels;
    bool palindromic = false;
    bool smooth = false;
    long long dim = 0;
    std::vector<long long> poincare;
};

inline ClassifyRecord compute_record(const CorootElement& lam, std::size_t cap) {
    ClassificationVerdict v = classify(lam, cap);
    ClassifyRecord r;
    r.lambda = lam.coords();
    for (SchubertLabel l : v.labels) r.labels.push_back(label_name(l));
    r.palindromic = v.palindromic;
    r.smooth = v.smooth;
    r.dim = lam.length_s();
    r.poincare = poincare_polynomial(lam, cap).coeffs();
    return r;
}

inline std::string cache_location(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    const char* env = std::getenv("SCHUBERT_CACHE");
    return env ? std::string(env) : std::string();
}

inline std::optional<ClassifyRecord> cache_lookup(const std::string& path, char type, int rank,
                                                  const std::vector<long long>& lambda,
                                                  std::ostream& err) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        bool shaped = !j.is_discarded() && j.is_object() && j.contains("type") && j.contains("rank") &&
                      j.contains("lambda") && j.contains("labels") && j.contains("palindromic") &&
                      j.contains("smooth") && j.contains("dim") && j.contains("poincare");
        if (!shaped) {
            err << "warning: skipping malformed cache line " << lineno << "\n";
            continue;
        }
        try {
            if (j["type"].get<std::string>() != std::string(1, type)) continue;
            if (j["rank"].get<int>() != rank) continue;
            if (j["lambda"].get<std::vector<long long>>() != lambda) continue;
            ClassifyRecord r;
            r.lambda = lambda;
            r.labels = j["labels"].get<std::vector<std::string>>();
            r.palindromic = j["palindromic"].get<bool>();
            r.smooth = j["smooth"].get<bool>();
            r.dim = j["dim"].get<long long>();
            r.poincare = j["poincare"].get<std::vector<long long>>();
            return r;
        } catch (const json::exception&) {
            err << "warning: skipping malformed cache line " << lineno << "\n";
        }
    }
    return std::nullopt;
}

inline void cache_append(const std::string& path, char type, int rank, const ClassifyRecord& r,
                         std::ostream& err) {
    std::ofstream out(path, std::ios::app);
    if (!out) {
        err << "warning: cannot write cache file " << path << "\n";
        return;
    }
    ordered_json j;
    j["type"] = std::string(1, type);
    j["rank"] = rank;
    j["lambda"] = r.lambda;
    j["labels"] = r.labels;
    j["palindromic"] = r.palindromic;
    j["smooth"] = r.smooth;
    j["dim"] = r.dim;
    j["poincare"] = r.poincare;
    out << j.dump() << "\n";
}

inline ordered_json record_json(const ClassifyRecord& r) {
    ordered_json j;
    j["lambda"] = r.lambda;
    j["labels"] = r.labels;
    j["palindromic"] = r.palindromic;
    j["smooth"] = r.smooth;
    j["dim"] = r.dim;
    j["poincare"] = r.poincare;
    return j;
}

inline void print_record(const ClassifyRecord& r, const std::string& fmt, std::ostream& out) {
    if (fmt == "json") {
        out << record_json(r).dump() << "\n";
    } else if (fmt == "csv") {
        out << "lambda,lengthS,palindromic,labels,dim\n";
        out << '"' << coords_text(r.lambda) << "\"," << r.dim << "," << bool_text(r.palindromic)
            << "," << join(r.labels, ";") << "," << r.dim << "\n";
    } else {
        out << "lambda: " << coords_text(r.lambda) << "\n";
        out << "labels: " << (r.labels.empty() ? std::string("(none)") : join(r.labels, ", ")) << "\n";
        out << "palindromic: " << bool_text(r.palindromic) << "\n";
        out << "smooth: " << bool_text(r.smooth) << "\n";
        out << "dim: " << r.dim << "\n";
        out << "poincare: " << IntPolynomial(r.poincare).digits() << "\n";
    }
}

struct CommandOptions {
    std::string type;
    int rank = 0;
    std::string lambda;
    int max_len = -1;
    std::string format;
    std::string cache;
    std::size_t cap = kDefaultMemberCap;
    long long spiral_k = 1;
    bool spiral_primed = false;
    bool list_elements = false;
};

inline int run_classify(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    auto rs = build_system(opt.type, opt.rank);
    CorootElement lam(rs, CorootElement::parse_coords(opt.lambda));
    std::string fmt = resolve_format(opt.format, "json", {"json", "csv", "text"});
    std::string cache = cache_location(opt.cache);

    std::optional<ClassifyRecord> rec;
    if (!cache.empty()) rec = cache_lookup(cache, rs->type_char(), rs->rank(), lam.coords(), err);
    if (!rec) {
        rec = compute_record(lam, opt.cap);
        if (!cache.empty()) cache_append(cache, rs->type_char(), rs->rank(), *rec, err);
    }
    print_record(*rec, fmt, out);
    return 0;
}

inline int run_enumerate(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    if (opt.max_len < 0) throw Error("enumerate requires --max-len");
    auto levels = enumerate_levels(rs, opt.max_len, opt.cap);
    SeriesPrefix series = bott_prefix(*rs, opt.max_len);
    std::string fmt = resolve_format(opt.format, "text", {"text", "json", "csv"});

    if (fmt == "json") {
        ordered_json top;
        top["type"] = std::string(1, rs->type_char());
        top["rank"] = rs->rank();
        ordered_json rows = ordered_json::array();
        for (std::size_t len = 0; len < levels.size(); ++len) {
            ordered_json row;
            row["len"] = len;
            row["count"] = levels[len].size();
            row["series"] = series[len];
            row["match"] = static_cast<long long>(levels[len].size()) == series[len];
            if (opt.list_elements) {
                ordered_json elems = ordered_json::array();
                for (const CorootElement& e : levels[len]) elems.push_back(e.coords());
                row["elements"] = elems;
            }
            rows.push_back(row);
        }
        top["levels"] = rows;
        out << top.dump() << "\n";
        return 0;
    }
    if (fmt == "csv") {
        out << "len,count,series,match\n";
        for (std::size_t len = 0; len < levels.size(); ++len) {
            out << len << "," << levels[len].size() << "," << series[len] << ","
                << bool_text(static_cast<long long>(levels[len].size()) == series[len]) << "\n";
        }
        return 0;
    }
    out << "len  count  series  match\n";
    for (std::size_t len = 0; len < levels.size(); ++len) {
        bool match = static_cast<long long>(levels[len].size()) == series[len];
        out << len << "  " << levels[len].size() << "  " << series[len] << "  "
            << (match ? "ok" : "MISMATCH") << "\n";
        if (opt.list_elements) {
            for (const CorootElement& e : levels[len]) out << "  " << e.to_string() << "\n";
        }
    }
    return 0;
}

inline int run_hasse(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    if (opt.max_len < 0) throw Error("hasse requires --max-len");
    auto levels = enumerate_levels(rs, opt.max_len, opt.cap);
    std::string fmt = resolve_format(opt.format, "dot", {"dot", "text"});

    if (fmt == "text") {
        for (std::size_t len = 0; len < levels.size(); ++len) {
            for (const CorootElement& e : levels[len]) {
                out << len << " | " << e.to_string() << " |";
                for (const CorootElement& c : covers(e)) out << " " << c.to_string();
                out << "\n";
            }
        }
        return 0;
    }
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t len = 0; len < levels.size(); ++len) {
        for (const CorootElement& e : levels[len]) {
            bool pal = !e.is_origin() && is_palindromic(e, opt.cap);
            bool cpo = !e.is_origin() && is_cpo(e);
            out << "  \"" << e.to_string() << "\"";
            std::vector<std::string> attrs;
            if (pal) attrs.push_back("shape=circle");
            if (cpo) attrs.push_back("peripheries=2");
            if (!attrs.empty()) out << " [" << join(attrs, ", ") << "]";
            out << ";\n";
        }
    }
    for (std::size_t len = 1; len < levels.size(); ++len) {
        for (const CorootElement& e : levels[len]) {
            for (const CorootElement& c : covers(e)) {
                out << "  \"" << e.to_string() << "\" -> \"" << c.to_string() << "\";\n";
            }
        }
    }
    out << "}\n";
    return 0;
}

inline int run_cpos(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    std::string fmt = resolve_format(opt.format, "text", {"text", "json"});
    auto cpos = enumerate_cpos(*rs);

    if (fmt == "json") {
        ordered_json rows = ordered_json::array();
        for (const CpoDescriptor& d : cpos) {
            ordered_json row;
            row["nodes"] = d.subgraph_nodes;
            row["boundary"] = d.boundary_nodes;
            row["top"] = d.top.coords();
            row["dim"] = d.dim;
            rows.push_back(row);
        }
        out << rows.dump() << "\n";
        return 0;
    }
    out << "count: " << cpos.size() << "\n";
    for (const CpoDescriptor& d : cpos) {
        std::vector<std::string> nodes, boundary;
        for (int v : d.subgraph_nodes) nodes.push_back(RootSystem::node_name(v));
        for (int v : d.boundary_nodes) boundary.push_back(RootSystem::node_name(v));
        out << "nodes {" << join(nodes, " ") << "} boundary {" << join(boundary, " ") << "} top "
            << d.top.to_string() << " dim " << d.dim << "\n";
    }
    return 0;
}

inline int run_chains(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    if (opt.max_len < 0) throw Error("chains requires --max-len");
    std::string fmt = resolve_format(opt.format, "text", {"text", "json"});
    auto chains = enumerate_chains(*rs, opt.max_len, opt.cap);

    if (fmt == "json") {
        ordered_json rows = ordered_json::array();
        for (const ChainDescriptor& d : chains) {
            ordered_json row;
            row["top"] = d.top.coords();
            row["length"] = d.top.length_s();
            row["word"] = d.word.letters;
            row["cup"] = d.cup;
            row["pd"] = chain_pd(d);
            rows.push_back(row);
        }
        out << rows.dump() << "\n";
        return 0;
    }
    out << "count: " << chains.size() << "\n";
    for (const ChainDescriptor& d : chains) {
        std::string cup;
        for (std::size_t i = 0; i < d.cup.size(); ++i) {
            if (i) cup += ",";
            cup += std::to_string(d.cup[i]);
        }
        out << "top " << d.top.to_string() << " len " << d.top.length_s() << " word ["
            << d.word.to_string() << "] cup (" << cup << ") pd " << bool_text(chain_pd(d)) << "\n";
    }
    return 0;
}

inline int run_series(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    int cutoff = opt.max_len < 0 ? 16 : opt.max_len;
    SeriesPrefix series = bott_prefix(*rs, cutoff);
    ForkStats fork = fork_stats(*rs);
    std::string fmt = resolve_format(opt.format, "text", {"text", "json"});

    if (fmt == "json") {
        ordered_json j;
        j["type"] = std::string(1, rs->type_char());
        j["rank"] = rs->rank();
        j["series"] = series;
        j["infinite_chain"] = fork.infinite;
        if (!fork.infinite) {
            j["fork_level"] = fork.fork_level;
            j["options"] = fork.options;
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << "series:";
    for (long long c : series) out << " " << c;
    out << "\n";
    if (fork.infinite) {
        out << "fork_level: infinite\n";
    } else {
        out << "fork_level: " << fork.fork_level << "\n";
        out << "options: " << fork.options << "\n";
    }
    return 0;
}

inline int run_spiral(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    auto rs = build_system(opt.type, opt.rank);
    CorootElement lam = spiral_lambda(rs, opt.spiral_k, opt.spiral_primed);
    IntPolynomial poin = poincare_polynomial(lam, opt.cap);
    IntPolynomial expected = q_binomial(rs->rank() + opt.spiral_k, rs->rank());
    bool match = poin == expected;
    std::string fmt = resolve_format(opt.format, "text", {"text", "json"});

    if (fmt == "json") {
        ordered_json j;
        j["lambda"] = lam.coords();
        j["length"] = lam.length_s();
        j["poincare"] = poin.coeffs();
        j["binomial_match"] = match;
        j["pd"] = poin.is_palindromic();
        out << j.dump() << "\n";
    } else {
        out << "lambda: " << lam.to_string() << "\n";
        out << "length: " << lam.length_s() << "\n";
        out << "poincare: " << poin.digits() << "\n";
        out << "binomial_match: " << bool_text(match) << "\n";
        out << "pd: " << bool_text(poin.is_palindromic()) << "\n";
    }
    return match ? 0 : 3;
}

inline int run_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    auto rs = build_system(opt.type, opt.rank);
    if (opt.max_len < 0) throw Error("verify requires --max-len");
    auto levels = enumerate_levels(rs, opt.max_len, opt.cap);
    SeriesPrefix series = bott_prefix(*rs, opt.max_len);

    int failures = 0;
    std::size_t total = 0;
    for (std::size_t len = 0; len < levels.size(); ++len) {
        if (static_cast<long long>(levels[len].size()) != series[len]) {
            err << "MISMATCH: level " << len << " has " << levels[len].size() << " elements, series says "
                << series[len] << "\n";
            ++failures;
        }
        for (const CorootElement& e : levels[len]) {
            ++total;
            ClassificationVerdict v = classify(e, opt.cap);
            if (v.palindromic != !v.labels.empty()) {
                err << "MISMATCH: " << e.to_string() << " palindromic=" << bool_text(v.palindromic)
                    << " but labels " << (v.labels.empty() ? "empty" : "present") << "\n";
                ++failures;
            }
            if (v.smooth && !v.palindromic) {
                err << "MISMATCH: " << e.to_string() << " smooth but not palindromic\n";
                ++failures;
            }
        }
        out << "len " << len << ": " << levels[len].size() << " elements ok\n";
    }
    if (failures > 0) {
        err << failures << " mismatches\n";
        return 3;
    }
    out << "verified " << rs->type_char() << rs->rank() << " up to length " << opt.max_len << ": "
        << total << " elements consistent\n";
    return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of affine Schubert varieties"};
    app.name("schubert");
    app.require_subcommand(1);

    detail::CommandOptions opt;
    auto add_common = [&](CLI::App* sub, bool need_rank = true) {
        sub->add_option("-t,--type", opt.type, "family letter A..G")->required();
        auto* r = sub->add_option("-r,--rank", opt.rank, "rank of the finite system");
        if (need_rank) r->required();
        sub->add_option("-f,--format", opt.format, "output format");
        sub->add_option("--cap", opt.cap, "member cap for ideal scans");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify one element");
    add_common(classify_cmd);
    classify_cmd->add_option("-l,--lambda", opt.lambda, "comma separated coordinates")->required();
    classify_cmd->add_option("--cache", opt.cache, "append-only result cache (JSON lines)");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "count elements level by level");
    add_common(enumerate_cmd);
    enumerate_cmd->add_option("-m,--max-len", opt.max_len, "largest length to reach")->required();
    enumerate_cmd->add_flag("--elements", opt.list_elements, "also list the elements");

    CLI::App* hasse_cmd = app.add_subcommand("hasse", "cover diagram of an order ideal prefix");
    add_common(hasse_cmd);
    hasse_cmd->add_option("-m,--max-len", opt.max_len, "largest length to reach")->required();

    CLI::App* cpos_cmd = app.add_subcommand("cpos", "list the closed parabolic orbits");
    add_common(cpos_cmd);

    CLI::App* chains_cmd = app.add_subcommand("chains", "list the totally ordered ideals");
    add_common(chains_cmd);
    chains_cmd->add_option("-m,--max-len", opt.max_len, "longest firing sequence to try")->required();

    CLI::App* series_cmd = app.add_subcommand("series", "size series and fork structure");
    add_common(series_cmd);
    series_cmd->add_option("-m,--max-len", opt.max_len, "series cutoff");

    CLI::App* spiral_cmd = app.add_subcommand("spiral", "spiral element in the first family");
    add_common(spiral_cmd);
    spiral_cmd->add_option("-k,--index", opt.spiral_k, "spiral index")->required();
    spiral_cmd->add_flag("--primed", opt.spiral_primed, "mirrored variant");

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check classification against scans");
    add_common(verify_cmd);
    verify_cmd->add_option("-m,--max-len", opt.max_len, "largest length to scan")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify_cmd->parsed()) return detail::run_classify(opt, out, err);
        if (enumerate_cmd->parsed()) return detail::run_enumerate(opt, out, err);
        if (hasse_cmd->parsed()) return detail::run_hasse(opt, out, err);
        if (cpos_cmd->parsed()) return detail::run_cpos(opt, out, err);
        if (chains_cmd->parsed()) return detail::run_chains(opt, out, err);
        if (series_cmd->parsed()) return detail::run_series(opt, out, err);
        if (spiral_cmd->parsed()) return detail::run_spiral(opt, out, err);
        if (verify_cmd->parsed()) return detail::run_verify(opt, out, err);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

}  // namespace schubert::cli

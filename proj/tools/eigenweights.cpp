// Command-line front end: eigenweight tables, character values, tableau
// counts, and the formula-vs-oracle verification harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "ew/characters.hpp"
#include "ew/formulas.hpp"
#include "ew/gysin.hpp"
#include "ew/tableaux.hpp"

using json = nlohmann::ordered_json;
using namespace ew;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Partition parse_partition(const std::string& text) {
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stol(item));
    }
    return Partition(std::move(parts));
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (long part : p.parts()) arr.push_back(part);
    return arr;
}

json spec_json(const GroupSpec& spec) {
    json j;
    j["family"] = spec.family_name();
    j["n"] = spec.rank;
    if (spec.family == GroupSpec::Family::A) j["m"] = spec.m;
    if (spec.family == GroupSpec::Family::D)
        j["coweight"] =
            spec.coweight == GroupSpec::Coweight::Spin ? "spin" : "standard";
    j["N"] = spec.eta_exponent();
    return j;
}

json eigen_payload(const EigenResult& result) {
    json j;
    json weights;
    for (const auto& [label, value] : result.eigenweights)
        weights[label] = rat_to_string(value);
    j["eigenweights"] = std::move(weights);
    if (result.block) {
        const auto& b = *result.block;
        json jb;
        jb["basis"] = {b.basis[0], b.basis[1]};
        json rows = json::array();
        rows.push_back(json::array(
            {rat_to_string(b.matrix[0][0]), rat_to_string(b.matrix[0][1])}));
        rows.push_back(json::array(
            {rat_to_string(b.matrix[1][0]), rat_to_string(b.matrix[1][1])}));
        jb["matrix"] = std::move(rows);
        if (b.eigenvalues) {
            jb["eigenvalues"] = {rat_to_string((*b.eigenvalues)[0]),
                                 rat_to_string((*b.eigenvalues)[1])};
        } else {
            jb["char_poly"] = {rat_to_string(b.char_poly[0]),
                               rat_to_string(b.char_poly[1]),
                               rat_to_string(b.char_poly[2])};
        }
        j["block"] = std::move(jb);
    }
    return j;
}

bool results_equal(const EigenResult& a, const EigenResult& b) {
    if (a.eigenweights != b.eigenweights) return false;
    if (a.block.has_value() != b.block.has_value()) return false;
    if (a.block && (a.block->basis != b.block->basis ||
                    a.block->matrix != b.block->matrix))
        return false;
    return true;
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // flat "key  value" table of the leaf entries
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (const auto& [k, v] : node.items())
                    walk(v, prefix.empty() ? k : prefix + "." + k);
            } else if (node.is_array()) {
                std::cout << prefix << "\t" << node.dump() << "\n";
            } else {
                std::cout << prefix << "\t"
                          << (node.is_string() ? node.get<std::string>() : node.dump())
                          << "\n";
            }
        };
    walk(doc, "");
}

GroupSpec build_spec(const std::string& family, long n, long m,
                     const std::string& coweight) {
    if (family == "A") return GroupSpec::typeA(n, m);
    if (family == "B") return GroupSpec::typeB(n);
    if (family == "C") return GroupSpec::typeC(n);
    if (family == "D")
        return GroupSpec::typeD(n, coweight == "standard"
                                       ? GroupSpec::Coweight::Standard
                                       : GroupSpec::Coweight::Spin);
    throw std::invalid_argument("unknown family " + family);
}

int cmd_eigen(const std::string& family, long n, long m,
              const std::string& coweight, const std::string& method,
              const std::string& format) {
    const GroupSpec spec = build_spec(family, n, m, coweight);
    if (method == "oracle" && spec.family == GroupSpec::Family::D &&
        spec.coweight == GroupSpec::Coweight::Standard) {
        std::cerr << "error: no localization oracle for the type D standard "
                     "coweight; use --method formula\n";
        return kExitUsage;
    }

    json doc;
    doc["command"] = "eigen";
    doc["spec"] = spec_json(spec);
    doc["method"] = method;

    if (method == "formula" || method == "both") {
        const EigenResult formula = formulas::compute(spec);
        doc.update(eigen_payload(formula));
        if (method == "both") {
            const EigenResult oracle = oracle_eigen(spec);
            doc["oracle"] = eigen_payload(oracle);
            json match;
            bool all = true;
            for (size_t i = 0; i < formula.eigenweights.size(); ++i) {
                const bool ok = i < oracle.eigenweights.size() &&
                                formula.eigenweights[i] == oracle.eigenweights[i];
                match[formula.eigenweights[i].first] = ok;
                all = all && ok;
            }
            if (formula.block || oracle.block) {
                const bool ok = results_equal(formula, oracle);
                match["block"] = ok;
                all = all && ok;
            }
            doc["match"] = std::move(match);
            emit(doc, format);
            return all ? kExitOk : kExitMismatch;
        }
    } else if (method == "oracle") {
        doc.update(eigen_payload(oracle_eigen(spec)));
    } else {
        std::cerr << "error: unknown method " << method << "\n";
        return kExitUsage;
    }
    emit(doc, format);
    return kExitOk;
}

int cmd_char(const std::string& shape_text, const std::string& class_text,
             const std::string& format) {
    const Partition shape = parse_partition(shape_text);
    const Partition cls = parse_partition(class_text);
    if (shape.size() != cls.size()) {
        std::cerr << "error: |shape| = " << shape.size() << " but |class| = "
                  << cls.size() << "\n";
        return kExitUsage;
    }
    json doc;
    doc["command"] = "char";
    doc["shape"] = partition_json(shape);
    doc["class"] = partition_json(cls);
    doc["value"] = character(shape, cls).get_str();
    emit(doc, format);
    return kExitOk;
}

int cmd_syt(const std::string& shape_text, const std::string& inner_text,
            const std::string& format) {
    const Partition shape = parse_partition(shape_text);
    json doc;
    doc["command"] = "syt";
    doc["shape"] = partition_json(shape);
    if (!inner_text.empty()) {
        const Partition inner = parse_partition(inner_text);
        if (!shape.contains(inner)) {
            std::cerr << "error: inner shape not contained in shape\n";
            return kExitUsage;
        }
        doc["inner"] = partition_json(inner);
        doc["count"] = skew_syt_count(shape, inner).get_str();
    } else {
        doc["count"] = syt_count(shape).get_str();
    }
    emit(doc, format);
    return kExitOk;
}

int cmd_verify(long a_max, long b_max, long c_max, long d_max,
               const std::string& family_filter, long n_filter,
               const std::string& format) {
    for (long bound : {a_max, b_max, c_max, d_max})
        if (bound < 1) {
            std::cerr << "error: rank bounds must be >= 1\n";
            return kExitUsage;
        }

    std::vector<GroupSpec> specs;
    for (long n = 2; n <= a_max; ++n)
        for (long m = 1; m < n; ++m) specs.push_back(GroupSpec::typeA(n, m));
    for (long n = 1; n <= b_max; ++n) specs.push_back(GroupSpec::typeB(n));
    for (long n = 2; n <= c_max; ++n) specs.push_back(GroupSpec::typeC(n));
    for (long n = 2; n <= d_max; ++n) specs.push_back(GroupSpec::typeD(n));
    if (!family_filter.empty())
        std::erase_if(specs, [&](const GroupSpec& s) {
            return s.family_name() != family_filter;
        });
    if (n_filter > 0)
        std::erase_if(specs, [&](const GroupSpec& s) { return s.rank != n_filter; });

    struct Entry {
        GroupSpec spec;
        bool pass = false;
        double seconds = 0;
        EigenResult formula, oracle;
    };
    std::vector<Entry> entries(specs.size());

    long workers = static_cast<long>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EIGENWEIGHTS_WORKERS"))
        workers = std::max(1L, std::atol(env));
    workers = std::max(1L, std::min(workers, static_cast<long>(specs.size())));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
            const auto start = std::chrono::steady_clock::now();
            Entry& e = entries[i];
            e.spec = specs[i];
            e.formula = formulas::compute(specs[i]);
            e.oracle = oracle_eigen(specs[i]);
            e.pass = results_equal(e.formula, e.oracle);
            e.seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            std::cerr << "[verify] " << specs[i].to_string() << ": "
                      << (e.pass ? "ok" : "MISMATCH") << " ("
                      << e.seconds << "s)\n";
        }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    json doc;
    doc["command"] = "verify";
    json results = json::array();
    bool all_pass = true;
    for (const Entry& e : entries) {
        json r;
        r["spec"] = spec_json(e.spec);
        r["pass"] = e.pass;
        r["seconds"] = e.seconds;
        if (!e.pass) {
            r["formula"] = eigen_payload(e.formula);
            r["oracle"] = eigen_payload(e.oracle);
        }
        results.push_back(std::move(r));
        all_pass = all_pass && e.pass;
    }
    doc["results"] = std::move(results);
    doc["all_pass"] = all_pass;
    emit(doc, format);
    return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact eigenweight tables for classical groups"};
    app.require_subcommand(1);

    std::string family, coweight = "spin", method = "formula", format = "json";
    long n = 0, m = 0;
    auto* eigen = app.add_subcommand("eigen", "Eigenweights for one group");
    eigen->add_option("--family", family, "A, B, C, or D")->required();
    eigen->add_option("--n", n, "rank")->required();
    eigen->add_option("--m", m, "type A coweight parameter");
    eigen->add_option("--coweight", coweight, "spin|standard (type D)")
        ->check(CLI::IsMember({"spin", "standard"}));
    eigen->add_option("--method", method, "formula|oracle|both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    eigen->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string shape_text, class_text, inner_text;
    auto* chr = app.add_subcommand("char", "Symmetric group character value");
    chr->add_option("--shape", shape_text, "partition, e.g. 4,3,2,1")->required();
    chr->add_option("--class", class_text, "cycle type partition")->required();
    chr->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* syt = app.add_subcommand("syt", "Standard Young tableau count");
    syt->add_option("--shape", shape_text, "outer partition")->required();
    syt->add_option("--inner", inner_text, "inner partition (skew count)");
    syt->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    long a_max = 5, b_max = 5, c_max = 4, d_max = 5, n_filter = 0;
    std::string family_filter;
    auto* verify = app.add_subcommand("verify", "Cross-check formulas vs oracle");
    verify->add_option("--a-max", a_max, "max rank for type A (default 5)");
    verify->add_option("--b-max", b_max, "max rank for type B (default 5)");
    verify->add_option("--c-max", c_max, "max rank for type C (default 4)");
    verify->add_option("--d-max", d_max, "max rank for type D spin (default 5)");
    verify->add_option("--family", family_filter, "restrict to one family")
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
    verify->add_option("--n", n_filter, "restrict to one rank");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eigen->parsed()) return cmd_eigen(family, n, m, coweight, method, format);
        if (chr->parsed()) return cmd_char(shape_text, class_text, format);
        if (syt->parsed()) return cmd_syt(shape_text, inner_text, format);
        if (verify->parsed())
            return cmd_verify(a_max, b_max, c_max, d_max, family_filter, n_filter,
                              format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}

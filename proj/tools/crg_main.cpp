#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "crg/catalog.hpp"
#include "crg/characters.hpp"
#include "crg/counting.hpp"
#include "crg/errors.hpp"
#include "crg/report_io.hpp"
#include "crg/verify.hpp"

namespace {

struct Options {
    std::string group;
    std::string method = "all";
    std::string format = "text";
    std::string out;
    unsigned max_l = 0;  // 0 means rank + 6
    std::size_t max_order = 1000000;
    bool inject_fault = false;
    std::uint64_t fault_seed = 0;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw crg::usage_error("cannot open output file '" + path + "'");
    f << text;
}

std::string order_str(const crg::ReflectionGroup& W) {
    return crg::Int(static_cast<unsigned long>(W.order())).get_str();
}

nlohmann::json envelope(const crg::ReflectionGroup& W, const std::string& command,
                        nlohmann::json payload) {
    return nlohmann::json{{"group", W.name()},
                         {"command", command},
                         {"version", crg::kToolVersion},
                         {"payload", std::move(payload)}};
}

int run_info(const Options& opt) {
    const crg::ReflectionGroup W = crg::build_catalog_group(opt.group, opt.max_order);
    std::string degrees;
    for (unsigned d : W.spec().expected_degrees)
        degrees += (degrees.empty() ? "" : " ") + std::to_string(d);
    const bool constant_e = W.constant_fixator_order();
    if (opt.format == "json") {
        nlohmann::json degs = nlohmann::json::array();
        for (unsigned d : W.spec().expected_degrees) degs.push_back(d);
        nlohmann::json payload{{"order", order_str(W)},
                               {"rank", W.rank()},
                               {"reflections", W.num_reflections()},
                               {"hyperplanes", W.num_hyperplanes()},
                               {"invariant_degrees", std::move(degs)},
                               {"coxeter_number", W.coxeter_number()},
                               {"conjugacy_classes", W.num_classes()}};
        if (constant_e)
            payload["fixator_order"] = W.common_fixator_order();
        else
            payload["fixator_order"] = nullptr;
        emit(envelope(W, "info", std::move(payload)).dump(2) + "\n", opt.out);
    } else if (opt.format == "csv") {
        std::string text = "field,value\n";
        text += "group," + W.name() + "\n";
        text += "order," + order_str(W) + "\n";
        text += "rank," + std::to_string(W.rank()) + "\n";
        text += "reflections," + std::to_string(W.num_reflections()) + "\n";
        text += "hyperplanes," + std::to_string(W.num_hyperplanes()) + "\n";
        text += "coxeter_number," + std::to_string(W.coxeter_number()) + "\n";
        text += "conjugacy_classes," + std::to_string(W.num_classes()) + "\n";
        emit(text, opt.out);
    } else {
        std::string text = "group " + W.name() + "\n";
        text += "order " + order_str(W) + "\n";
        text += "rank " + std::to_string(W.rank()) + "\n";
        text += "reflections " + std::to_string(W.num_reflections()) + "\n";
        text += "hyperplanes " + std::to_string(W.num_hyperplanes()) + "\n";
        text += std::string("fixator orders ") +
                (constant_e ? "constant " + std::to_string(W.common_fixator_order()) : "mixed") +
                "\n";
        text += "invariant degrees " + degrees + "\n";
        text += "generator product order " + std::to_string(W.coxeter_number()) + "\n";
        text += "conjugacy classes " + std::to_string(W.num_classes()) + "\n";
        emit(text, opt.out);
    }
    return 0;
}

int run_table(const Options& opt) {
    const crg::ReflectionGroup W = crg::build_catalog_group(opt.group, opt.max_order);
    const crg::CharacterTable t = crg::character_table(W);
    if (opt.format == "json") {
        nlohmann::json sizes = nlohmann::json::array();
        for (unsigned k = 0; k < W.num_classes(); ++k) sizes.push_back(W.class_size(k));
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const crg::Cyclotomic& v : row) r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        emit(envelope(W, "table",
                      nlohmann::json{{"modulus", t.prime},
                                     {"class_sizes", std::move(sizes)},
                                     {"rows", std::move(rows)}})
                     .dump(2) +
                 "\n",
             opt.out);
    } else if (opt.format == "csv") {
        std::string text = "row,class,value\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
                std::string v = t.rows[r][k].str();
                if (v.find(',') != std::string::npos) v = '"' + v + '"';
                text += std::to_string(r) + "," + std::to_string(k) + "," + v + "\n";
            }
        emit(text, opt.out);
    } else {
        std::string text =
            "character table of " + W.name() + " (split modulus " + std::to_string(t.prime) + ")\n";
        text += "class sizes:";
        for (unsigned k = 0; k < W.num_classes(); ++k)
            text += " " + std::to_string(W.class_size(k));
        text += "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            text += "row " + std::to_string(r) + ":";
            for (const crg::Cyclotomic& v : t.rows[r]) text += "  " + v.str();
            text += "\n";
        }
        emit(text, opt.out);
    }
    return 0;
}

int run_count(const Options& opt) {
    const crg::ReflectionGroup W = crg::build_catalog_group(opt.group, opt.max_order);
    const unsigned max_l = opt.max_l != 0 ? opt.max_l : W.rank() + 6;
    crg::CountReport report;
    report.group = W.name();
    report.method = opt.method;
    if (opt.method == "all") {
        std::vector<std::vector<crg::Int>> routes;
        for (crg::CountMethod m : crg::all_methods()) routes.push_back(crg::count(W, m, max_l));
        for (std::size_t m = 1; m < routes.size(); ++m)
            for (unsigned l = 0; l <= max_l; ++l)
                if (routes[m][l] != routes[0][l])
                    throw crg::consistency_error(
                        "factorization counts of " + W.name() + " disagree at length " +
                        std::to_string(l) + ": route " +
                        crg::method_name(crg::all_methods()[m]) + " gives " +
                        routes[m][l].get_str() + ", route dp gives " + routes[0][l].get_str());
        report.counts = std::move(routes[0]);
    } else {
        report.counts = crg::count(W, crg::parse_method(opt.method), max_l);
    }
    if (opt.format == "json")
        emit(crg::to_json(report) + "\n", opt.out);
    else if (opt.format == "csv")
        emit(crg::to_csv(report), opt.out);
    else
        emit(crg::to_text(report), opt.out);
    return 0;
}

int run_verify(const Options& opt) {
    crg::VerifyOptions vo;
    vo.max_l = opt.max_l;
    vo.inject_fault = opt.inject_fault;
    vo.fault_seed = opt.fault_seed;
    vo.max_order = opt.max_order;
    const crg::VerificationReport report = crg::run_suite(opt.group, vo);
    if (opt.format == "json")
        emit(crg::to_json(report) + "\n", opt.out);
    else if (opt.format == "csv")
        emit(crg::to_csv(report), opt.out);
    else
        emit(crg::to_text(report), opt.out);
    return report.all_passed() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, character theory, and reflection factorization counts "
                 "for finite reflection groups"};
    app.set_version_flag("--version", crg::kToolVersion);
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* sub, bool with_counting) {
        sub->add_option("group", opt.group, "catalog name, e.g. A3, B2, I2(7), G(3,3,3), ST4")
            ->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out, "write the output to a file instead of stdout");
        sub->add_option("--max-order", opt.max_order,
                        "refuse to enumerate groups larger than this")
            ->envname("CRG_MAX_ORDER")
            ->capture_default_str();
        if (with_counting)
            sub->add_option("--max-l", opt.max_l,
                            "largest factorization length (default: rank + 6)");
    };

    CLI::App* info = app.add_subcommand("info", "basic structural facts about a group");
    add_common(info, false);
    CLI::App* table = app.add_subcommand("table", "exact irreducible character table");
    add_common(table, false);
    CLI::App* count = app.add_subcommand("count", "reflection factorization counts");
    add_common(count, true);
    count->add_option("--method", opt.method, "counting route, or all of them with agreement")
        ->check(CLI::IsMember({"dp", "spectral", "exterior", "closed", "egf", "all"}))
        ->capture_default_str();
    CLI::App* verify = app.add_subcommand("verify", "run the full consistency battery");
    add_common(verify, true);
    verify->add_flag("--inject-fault", opt.inject_fault,
                     "deliberately corrupt one table value before checking");
    verify->add_option("--fault-seed", opt.fault_seed, "seed selecting the corrupted value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(info)) return run_info(opt);
        if (app.got_subcommand(table)) return run_table(opt);
        if (app.got_subcommand(count)) return run_count(opt);
        return run_verify(opt);
    } catch (const crg::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const crg::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

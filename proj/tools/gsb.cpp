#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gsb/bundled.hpp"
#include "gsb/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternalCap = 4;

struct Input {
    std::string text;
    std::string source;
};

Input load_input(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return {std::move(text), arg};
    }
    if (const gsb::BundledExample* e = gsb::find_bundled(arg)) return {e->text, "bundled:" + arg};
    throw CLI::ValidationError("input", "no such file or bundled example: " + arg);
}

void emit_report(const gsb::Json& report, const std::string& report_path) {
    std::string payload = report.dump(2) + "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << payload;
    }
    std::cout << payload;
}

int run_quotient_dims(const gsb::PresentationFile& file, const std::string& input_text,
                      unsigned long n, std::size_t max_rules, const std::string& csv_path,
                      const std::string& report_path) {
    gsb::Json rep = gsb::report_header("quotient-dims", input_text);
    try {
        gsb::TruncatedQuotient q = gsb::build_truncated_quotient(file.presentation, n, max_rules);
        auto gr = gsb::filtration_dims(q);
        rep["n"] = n;
        rep["dim"] = q.dim();
        rep["gr_dims"] = gr;
        gsb::Json table = gsb::Json::array();
        std::size_t cum = 0;
        for (unsigned long k = 0; k < n; ++k) {
            cum += gr[k];
            table.push_back(gsb::Json{{"n", k + 1}, {"dim", cum}});
        }
        rep["dims_by_level"] = table;
        rep["rules"] = q.system().rules().size();
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            csv << "n,dim,gr\n";
            cum = 0;
            for (unsigned long k = 0; k < n; ++k) {
                cum += gr[k];
                csv << (k + 1) << "," << cum << "," << gr[k] << "\n";
            }
        }
        emit_report(rep, report_path);
        return kExitOk;
    } catch (const std::runtime_error& e) {
        rep["error"] = e.what();
        emit_report(rep, report_path);
        return kExitInternalCap;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-Shirshov bases for free algebras and their completions"};
    app.require_subcommand(1);

    std::string input, report_path, csv_path, emit_path;
    unsigned long weight_bound = 30, trunc = 0, max_length = 4, slice_length = 6;
    std::size_t max_rules = 100000;
    unsigned long h2_max_d = 0;
    bool trace = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("input", input, "presentation file or bundled example name")
                ->required();
        cmd->add_option("--report", report_path, "write the JSON report to this file");
    };

    auto* order_check = app.add_subcommand("order-check", "check order admissibility");
    add_common(order_check);
    order_check->add_option("--max-length", max_length, "exhaustive check bound");

    auto* gs_check = app.add_subcommand("gs-check", "classical Groebner-Shirshov check");
    add_common(gs_check);
    gs_check->add_flag("--trace", trace, "record reduction traces");

    auto* gs_complete = app.add_subcommand("gs-complete", "completion under a length cap");
    add_common(gs_complete);
    gs_complete->add_option("--trunc", trunc, "length cap n (models the ideal plus I^n)")
        ->required();
    gs_complete->add_option("--max-rules", max_rules, "rule-count safety cap");

    auto* series_check = app.add_subcommand("series-gs-check", "series-side check via min terms");
    add_common(series_check);
    series_check->add_option("--weight-bound", weight_bound, "weight bound for series reduction");
    series_check->add_flag("--trace", trace, "record reduction traces");

    auto* certify = app.add_subcommand("certify", "residual-nilpotence certificate");
    add_common(certify);
    certify->add_option("--weight-bound", weight_bound, "weight bound for series reduction");
    certify->add_flag("--trace", trace, "record reduction traces");

    auto* quotient_dims = app.add_subcommand("quotient-dims", "truncated quotient dimensions");
    add_common(quotient_dims);
    quotient_dims->add_option("-n,--trunc", trunc, "truncation degree")->required();
    quotient_dims->add_option("--max-rules", max_rules, "rule-count safety cap");
    quotient_dims->add_option("--csv", csv_path, "write a (n, dim, gr) CSV table");

    auto* h2 = app.add_subcommand("h2", "graded second homology via the Hopf formula");
    add_common(h2);
    h2->add_option("-d,--max-weight", h2_max_d, "compute slices for weights 1..d");
    h2->add_option("--slice-length", slice_length, "default weight range when -d is absent");

    auto* example = app.add_subcommand("example", "list or emit bundled presentations");
    example->add_option("input", input, "bundled example name");
    example->add_option("--emit", emit_path, "write the presentation text to a file ('-' = stdout)");
    example->add_option("--report", report_path, "write the JSON report to this file");

    auto* counterexample = app.add_subcommand("counterexample", "run a bundled counterexample");
    counterexample->add_option("input", input, "'one' or 'two'")->required();
    counterexample->add_option("--report", report_path, "write the JSON report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) {
            gsb::Json rep = gsb::report_header("example", input);
            if (input.empty()) {
                gsb::Json list = gsb::Json::array();
                for (const auto& e : gsb::bundled_examples())
                    list.push_back(gsb::Json{{"name", e.name},
                                             {"summary", e.summary},
                                             {"expected", e.expected},
                                             {"unsupported_order", e.unsupported_order}});
                rep["examples"] = list;
                emit_report(rep, report_path);
                return kExitOk;
            }
            const gsb::BundledExample* e = gsb::find_bundled(input);
            if (!e) {
                std::cerr << "unknown bundled example: " << input << "\n";
                return kExitUsage;
            }
            if (!emit_path.empty()) {
                if (emit_path == "-") {
                    std::cout << e->text;
                } else {
                    std::ofstream out(emit_path);
                    out << e->text;
                }
                return kExitOk;
            }
            rep["name"] = e->name;
            rep["summary"] = e->summary;
            rep["expected"] = e->expected;
            rep["unsupported_order"] = e->unsupported_order;
            emit_report(rep, report_path);
            return kExitOk;
        }

        if (counterexample->parsed()) {
            gsb::Json rep = gsb::report_header("counterexample", input);
            if (input == "one") {
                const gsb::BundledExample* e = gsb::find_bundled("counterexample-one");
                try {
                    gsb::parse_presentation(e->text);
                    rep["rejected"] = false;
                    emit_report(rep, report_path);
                    return kExitRefuted;  // should have been rejected
                } catch (const gsb::ParseError& pe) {
                    rep["rejected"] = true;
                    rep["message"] = pe.what();
                    emit_report(rep, report_path);
                    return kExitOk;
                }
            }
            if (input == "two") {
                const gsb::BundledExample* e = gsb::find_bundled("counterexample-two");
                gsb::PresentationFile file = gsb::parse_presentation(e->text);
                const gsb::Context& ctx = file.presentation.ctx;
                std::vector<gsb::Poly> elems{
                    gsb::parse_poly_expr("x3", ctx), gsb::parse_poly_expr("x4", ctx)};
                std::size_t rank = gsb::gr1_dependence(file.presentation, elems);
                rep["elements"] = gsb::Json::array({"x3", "x4"});
                rep["gr1_rank"] = rank;
                emit_report(rep, report_path);
                return rank == 1 ? kExitOk : kExitRefuted;
            }
            std::cerr << "expected 'one' or 'two'\n";
            return kExitUsage;
        }

        Input in = load_input(input);
        gsb::PresentationFile file = gsb::parse_presentation(in.text);
        const gsb::Context& ctx = file.presentation.ctx;

        if (order_check->parsed()) {
            gsb::Json rep = gsb::report_header("order-check", in.text);
            auto crep = gsb::check_admissible(file.presentation.order_max,
                                              static_cast<unsigned>(max_length));
            auto srep = gsb::check_admissible(file.presentation.order_min,
                                              static_cast<unsigned>(max_length));
            rep["classical"] = gsb::admissibility_to_json(crep);
            rep["series"] = gsb::admissibility_to_json(srep);
            rep["series_is_n_order"] = file.presentation.order_min.is_n_order();
            emit_report(rep, report_path);
            return crep.passed && srep.passed ? kExitOk : kExitRefuted;
        }

        if (gs_check->parsed()) {
            gsb::Json rep = gsb::report_header("gs-check", in.text);
            auto g = gsb::check_gs_classical(file.presentation.relations,
                                             file.presentation.order_max, trace);
            rep["result"] = gsb::gs_report_to_json(g, ctx);
            emit_report(rep, report_path);
            return g.is_gs() ? kExitOk : kExitRefuted;
        }

        if (gs_complete->parsed()) {
            gsb::Json rep = gsb::report_header("gs-complete", in.text);
            auto res = gsb::complete_classical(file.presentation.relations,
                                               file.presentation.order_max, trunc, max_rules);
            rep["trunc"] = trunc;
            rep["complete"] = res.complete;
            rep["compositions_processed"] = res.compositions_processed;
            gsb::Json rules = gsb::Json::array();
            for (const auto& r : res.rules) rules.push_back(gsb::print_poly_expr(r));
            rep["rules"] = rules;
            emit_report(rep, report_path);
            return res.complete ? kExitOk : kExitInternalCap;
        }

        if (series_check->parsed()) {
            gsb::Json rep = gsb::report_header("series-gs-check", in.text);
            auto g = gsb::check_gs_series(file.presentation.relations, file.presentation.order_min,
                                          weight_bound, trace);
            rep["result"] = gsb::gs_report_to_json(g, ctx);
            emit_report(rep, report_path);
            if (g.is_gs()) return kExitOk;
            return g.verdict == gsb::GSReport::Verdict::NotGS ? kExitRefuted : kExitInconclusive;
        }

        if (certify->parsed()) {
            gsb::Json rep = gsb::report_header("certify", in.text);
            auto cert = gsb::certify_residual_nilpotence(file.presentation, weight_bound, trace);
            rep["certificate"] = gsb::certificate_to_json(cert, ctx);
            emit_report(rep, report_path);
            switch (cert.verdict) {
                case gsb::Certificate::Verdict::Certified: return kExitOk;
                case gsb::Certificate::Verdict::RefutedHypothesis: return kExitRefuted;
                case gsb::Certificate::Verdict::Inconclusive: return kExitInconclusive;
            }
        }

        if (quotient_dims->parsed())
            return run_quotient_dims(file, in.text, trunc, max_rules, csv_path, report_path);

        if (h2->parsed()) {
            gsb::Json rep = gsb::report_header("h2", in.text);
            unsigned long dmax = h2_max_d ? h2_max_d : slice_length;
            gsb::Json dims = gsb::Json::array();
            for (unsigned long d = 1; d <= dmax; ++d)
                dims.push_back(gsb::Json{{"weight", d},
                                         {"dim", gsb::hopf_h2_graded(file.presentation, d)}});
            rep["h2"] = dims;
            emit_report(rep, report_path);
            return kExitOk;
        }
    } catch (const gsb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternalCap;
    }
    return kExitUsage;
}

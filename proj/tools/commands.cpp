#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "singline/oracles.hpp"

namespace singline::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string joined(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += items[i];
    }
    return out;
}

void write_md_record(const OutputRecord& r, std::ostream& out) {
    out << "| d | k | u | rank | delta | n | phi | warnings |\n"
        << "|---|---|---|------|-------|---|-----|----------|\n"
        << "| " << r.d << " | " << r.k << " | " << r.u << " | " << r.rank << " | " << r.delta << " | " << r.n
        << " | " << r.phi << " | " << joined(r.warnings, "; ") << " |\n";
}

/// Grid with one row per k and one column per d, as the small-values table is usually printed.
void write_md_grid(long dmax, const std::vector<OutputRecord>& records, std::ostream& out) {
    std::map<std::pair<long, long>, const OutputRecord*> cells;
    for (const auto& r : records) {
        cells[{r.d, r.k}] = &r;
    }
    out << "| k \\ d |";
    for (long d = 1; d <= dmax; ++d) {
        out << " " << d << " |";
    }
    out << "\n|---|";
    for (long d = 1; d <= dmax; ++d) {
        out << "---|";
    }
    out << "\n";
    for (long k = 1; k <= dmax; ++k) {
        out << "| " << k << " |";
        for (long d = 1; d <= dmax; ++d) {
            auto it = cells.find({d, k});
            out << " " << (it == cells.end() ? "" : it->second->n) << " |";
        }
        out << "\n";
    }
    bool header = false;
    for (const auto& r : records) {
        for (const auto& w : r.warnings) {
            if (!header) {
                out << "\nNotes:\n";
                header = true;
            }
            out << "- (d=" << r.d << ", k=" << r.k << ") " << w << "\n";
        }
    }
}

}  // namespace

OutputRecord make_record(const SurfaceQuery& q, const CountResult& result) {
    OutputRecord r;
    r.d = q.d();
    r.k = q.k();
    r.u = q.u();
    r.rank = result.rank;
    r.delta = result.delta;
    r.n = result.n.get_str();
    r.phi = to_ratio_string(result.phi);
    for (Warning w : result.warnings) {
        r.warnings.push_back(warning_text(w));
    }
    return r;
}

std::string to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["d"] = r.d;
    j["k"] = r.k;
    j["u"] = r.u;
    j["rank"] = r.rank;
    j["delta"] = r.delta;
    j["n"] = r.n;
    j["phi"] = r.phi;
    j["warnings"] = r.warnings;
    return j.dump();
}

std::string csv_header() { return "d,k,u,rank,delta,n,phi,warnings"; }

std::string to_csv(const OutputRecord& r) {
    std::ostringstream os;
    os << r.d << ',' << r.k << ',' << r.u << ',' << r.rank << ',' << r.delta << ',' << r.n << ',' << r.phi << ','
       << csv_field(joined(r.warnings, ";"));
    return os.str();
}

int cmd_count(long d, long k, Format format, std::ostream& out, std::ostream& err) {
    try {
        const SurfaceQuery q(d, k);
        const OutputRecord r = make_record(q, count_via_pipeline(q));
        switch (format) {
            case Format::Json: out << to_json(r) << "\n"; break;
            case Format::Csv: out << csv_header() << "\n" << to_csv(r) << "\n"; break;
            case Format::Md: write_md_record(r, out); break;
        }
        return kExitOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_table(long dmax, Format format, std::ostream& out, std::ostream& err) {
    if (dmax < 2) {
        err << "error: --dmax must be >= 2, got " << dmax << "\n";
        return kExitUsage;
    }
    std::vector<OutputRecord> records;
    for (long d = 1; d <= dmax; ++d) {
        for (long k = 1; k <= d; ++k) {
            const SurfaceQuery q(d, k);
            records.push_back(make_record(q, count_via_pipeline(q)));
        }
    }
    switch (format) {
        case Format::Json:
            for (const auto& r : records) {
                out << to_json(r) << "\n";
            }
            break;
        case Format::Csv:
            out << csv_header() << "\n";
            for (const auto& r : records) {
                out << to_csv(r) << "\n";
            }
            break;
        case Format::Md: write_md_grid(dmax, records, out); break;
    }
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& suite, std::ostream& out, std::ostream& err,
               const VerifyOptions& options) {
    std::vector<SuiteResult> results;
    try {
        if (suite) {
            results.push_back(run_suite(*suite, options));
        } else {
            results = run_all(options);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all_passed = true;
    for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks - r.failed << "/" << r.checks
            << " checks)\n";
        for (const auto& m : r.messages) {
            out << "    " << m << "\n";
        }
        all_passed = all_passed && r.passed();
    }
    out << (all_passed ? "all suites passed" : "verification FAILED") << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts degree-d surfaces in P^3 singular to order k along a line through generic points"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"md", Format::Md}};

    long d = 0;
    long k = 0;
    Format count_format = Format::Md;
    auto* count = app.add_subcommand("count", "Count surfaces for one (d, k)");
    count->add_option("--d", d, "Surface degree")->required();
    count->add_option("--k", k, "Order of singularity along the line")->required();
    count->add_option("--format", count_format, "Output format: json, csv, md")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    long dmax = 0;
    Format table_format = Format::Md;
    auto* table = app.add_subcommand("table", "Tabulate N for 1 <= k <= d <= dmax");
    table->add_option("--dmax", dmax, "Largest surface degree")->required();
    table->add_option("--format", table_format, "Output format: json, csv, md")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    std::optional<std::string> suite;
    auto* verify = app.add_subcommand("verify", "Run the cross-checking verification suites");
    verify->add_option("--suite", suite, "Run a single suite")
        ->check(CLI::IsMember(std::vector<std::string>(suite_names().begin(), suite_names().end())));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (count->parsed()) {
        return cmd_count(d, k, count_format, out, err);
    }
    if (table->parsed()) {
        return cmd_table(dmax, table_format, out, err);
    }
    return cmd_verify(suite, out, err);
}

}  // namespace singline::cli

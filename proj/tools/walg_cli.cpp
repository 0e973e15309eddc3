// walg: presentations and 1-dimensional representations of finite W-algebras.

#include "walg/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitInvariant = 4;

void write_file(const std::filesystem::path &p, const std::string &text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw walg::InvalidInput("cannot write " + p.string());
    out << text;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Finite W-algebra presentations over Q"};
    std::vector<std::string> positional;
    std::string mode_flag;
    walg::RunConfig cfg;
    app.add_option("args", positional, "[mode] type rank, e.g. 'present G 2'")->required()->expected(2, 3);
    app.add_option("--mode", mode_flag, "present | generators-only | onedim-fast");
    app.add_option("--labels", cfg.labels, "weighted Dynkin diagram, Bourbaki order, e.g. 1,0");
    app.add_option("--orbit", cfg.orbit, "orbit name from the catalogue, e.g. ~A1");
    app.add_option("--out", cfg.out_dir, "directory for report.json and report.txt")->capture_default_str();
    app.add_option("--threads", cfg.threads, "workers for the relations stage")->capture_default_str();
    app.add_option("--max-candidates", cfg.max_candidates,
                   "above this many correction monomials, build Theta from commutators")
        ->capture_default_str();
    app.add_option("--solver-degree-bound", cfg.solver.max_degree, "degree bound for the Groebner basis")
        ->capture_default_str();
    app.add_option("--solver-term-bound", cfg.solver.max_terms, "term bound for the Groebner basis")
        ->capture_default_str();
    app.add_flag("--gap-signs", cfg.gap_signs, "use GAP's sign convention for the G2 Chevalley basis");
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "do not print the text report");
    bool list = false;
    app.add_flag("--list-orbits", list, "print the orbit catalogue and exit");

    if (argc > 1 && std::string(argv[1]) == "--list-orbits") {
        for (const auto &e : walg::orbit_catalogue()) {
            std::cout << e.type << e.rank << "  " << e.name << "  ";
            for (std::size_t i = 0; i < e.labels.size(); ++i) std::cout << (i ? "," : "") << e.labels[i];
            std::cout << (e.extended_runtime ? "  (extended runtime)" : "") << "\n";
        }
        return 0;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        std::size_t p = 0;
        std::string mode = mode_flag.empty() ? "present" : mode_flag;
        if (positional.size() == 3) {
            if (!mode_flag.empty() && mode_flag != positional[0]) throw walg::InvalidInput("conflicting modes");
            mode = positional[p++];
        }
        cfg.mode = walg::parse_mode(mode);
        const std::string &type = positional[p++];
        if (type.size() != 1) throw walg::InvalidInput("type must be one letter A-G");
        cfg.type = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
        try {
            cfg.rank = std::stoi(positional[p]);
        } catch (const std::exception &) {
            throw walg::InvalidInput("rank must be an integer");
        }

        const auto t0 = std::chrono::steady_clock::now();
        walg::RunResult R = walg::run_pipeline(cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::filesystem::create_directories(cfg.out_dir);
        const std::string text = walg::report_text(R);
        write_file(std::filesystem::path(cfg.out_dir) / "report.json", walg::report_json(R).dump(2) + "\n");
        write_file(std::filesystem::path(cfg.out_dir) / "report.txt", text);
        if (!quiet) std::cout << text;
        std::cerr << "done in " << secs << " s\n";
        return 0;
    } catch (const walg::InvalidInput &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const walg::Undecided &e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const walg::InvariantFailure &e) {
        std::cerr << "invariant failure in " << e.module() << ": " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

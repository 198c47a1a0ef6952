// polysum: exact Minkowski sums of convex polytopes, with interchangeable
// dual, dual-opt, primal and oracle methods over cdd-style .ine/.ext files.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polysum/io.hpp"
#include "polysum/minkowski_dual.hpp"
#include "polysum/minkowski_primal.hpp"
#include "polysum/oracle.hpp"

namespace {

using namespace polysum;

// Exit contract: 0 success, 1 parse/validation errors (including internal
// consistency failures), 2 method preconditions, 3 --check mismatch.
struct ExitWith {
    int code;
    std::string message;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitWith{1, "cannot open '" + path + "'"};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PolyhedronFile loadFile(const std::string& path) {
    return parsePolyhedronFile(readFile(path));
}

std::uint64_t seedFromEnv() {
    if (const char* env = std::getenv("POLYSUM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ExitWith{1, "POLYSUM_SEED must be an unsigned integer"};
        }
    }
    return kDefaultSeed;
}

void writeOut(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ExitWith{1, "cannot write '" + path + "'"};
    out << content;
}

struct SumOptions {
    std::string fileA, fileB, method = "dual";
    std::string outH, outV;
    bool witnesses = false;
    bool check = false;
};

std::string witnessComments(const MinkowskiDecomposition& dec, const Polytope& A,
                            const Polytope& B) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dec.witnesses.size(); ++i) {
        auto [a, b] = dec.witnesses[i];
        os << "* witness " << i << " : " << str(dec.sum.vertices()[i]) << " = "
           << str(A.vertices()[a]) << " + " << str(B.vertices()[b]) << "\n";
    }
    return os.str();
}

int runSum(const SumOptions& opt) {
    if (opt.witnesses && opt.method == "oracle")
        throw ExitWith{1, "--witnesses needs a decomposition method, not oracle"};

    PolyhedronFile fa = loadFile(opt.fileA);
    PolyhedronFile fb = loadFile(opt.fileB);

    std::string witnessTrailer;
    Polytope sum = [&] {
        if (opt.method == "oracle") {
            // The oracle accepts degenerate summands, so V-files stay raw
            // point lists and never pass through the Polytope constructor.
            std::vector<Vector> ptsA = fa.rep == Representation::V
                                           ? pointsFromFile(fa)
                                           : polytopeFromFile(fa).vertices();
            std::vector<Vector> ptsB = fb.rep == Representation::V
                                           ? pointsFromFile(fb)
                                           : polytopeFromFile(fb).vertices();
            if (fa.dim != fb.dim)
                throw DimensionMismatch("summands live in different dimensions");
            return oracleSum(fa.dim, ptsA, ptsB);
        }
        Polytope A = polytopeFromFile(fa);
        Polytope B = polytopeFromFile(fb);
        MinkowskiDecomposition dec = [&] {
            if (opt.method == "dual") return sumDualBrute(A, B);
            if (opt.method == "dual-opt") return sumDualOptimized(A, B);
            return sumPrimal(A, B, seedFromEnv());
        }();

        if (opt.check && !(dec.sum == oracleSum(A, B)))
            throw ExitWith{3, "method '" + opt.method + "' disagrees with the oracle"};
        if (opt.witnesses) witnessTrailer = witnessComments(dec, A, B);
        return dec.sum;
    }();

    std::string hText = writePolyhedronFile(sum, Representation::H);
    std::string vText = writePolyhedronFile(sum, Representation::V) + witnessTrailer;

    if (opt.outH.empty() && opt.outV.empty()) {
        std::cout << hText << vText;
    } else {
        // witness comments ride on the V output; keep them when only an
        // H-file was requested
        if (!opt.outH.empty())
            writeOut(opt.outH, opt.outV.empty() ? hText + witnessTrailer : hText);
        if (!opt.outV.empty()) writeOut(opt.outV, vText);
    }
    return 0;
}

int runConvert(const std::string& file, const std::string& to,
               const std::string& outPath) {
    Polytope p = polytopeFromFile(loadFile(file));
    std::string text =
        writePolyhedronFile(p, to == "H" ? Representation::H : Representation::V);
    if (outPath.empty())
        std::cout << text;
    else
        writeOut(outPath, text);
    return 0;
}

int runValidate(const std::string& file) {
    Polytope p = [&] {
        try {
            return polytopeFromFile(loadFile(file));
        } catch (const Error& e) {
            throw ExitWith{1, std::string("invalid polytope: ") + e.what()};
        }
    }();
    ValidationReport rep = p.validate();
    if (rep.ok()) {
        std::cout << "valid: dimension " << p.dim() << ", " << p.vertices().size()
                  << " vertices, " << p.facets().size() << " facets\n";
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    return 1;
}

int runCap(const std::string& fileA, const std::string& fileB, std::size_t anchor) {
    Polytope A = polytopeFromFile(loadFile(fileA));
    Polytope B = polytopeFromFile(loadFile(fileB));
    if (anchor >= A.vertices().size())
        throw ExitWith{1, "vertex index " + std::to_string(anchor) + " out of range"};
    PolyhedralCap cap = polyhedralCap(A, B, anchor);
    std::cout << "anchor " << anchor << " : " << str(A.vertices()[anchor])
              << "\n";
    std::cout << "members:";
    for (std::size_t m : cap.members) std::cout << " " << m;
    std::cout << "\n";
    for (std::size_t m : cap.members)
        std::cout << "member " << m << " : " << str(B.vertices()[m]) << "\n";
    std::cout << "connected: " << (connectedInGraph(B, cap.members) ? "yes" : "no")
              << "\n";
    return 0;
}

int runBench(const std::string& fileA, const std::string& fileB, unsigned repeat) {
    Polytope A = polytopeFromFile(loadFile(fileA));
    Polytope B = polytopeFromFile(loadFile(fileB));

    // Deterministic payload on stdout; wall times on stderr so repeated runs
    // stay byte-identical.
    auto timeIt = [&](auto&& fn, const char* name) {
        auto start = std::chrono::steady_clock::now();
        for (unsigned r = 1; r < repeat; ++r) fn();
        auto result = fn();
        auto stop = std::chrono::steady_clock::now();
        std::chrono::duration<double, std::milli> ms = (stop - start) / repeat;
        std::cerr << "time " << name << ": " << ms.count() << " ms/run\n";
        return result;
    };

    MinkowskiDecomposition brute =
        timeIt([&] { return sumDualBrute(A, B); }, "dual");
    MinkowskiDecomposition opt =
        timeIt([&] { return sumDualOptimized(A, B); }, "dual-opt");
    MinkowskiDecomposition primal =
        timeIt([&] { return sumPrimal(A, B, seedFromEnv()); }, "primal");
    Polytope oracle = timeIt([&] { return oracleSum(A, B); }, "oracle");

    auto line = [](const char* name, const Polytope& p) {
        std::cout << "method " << name << ": vertices " << p.vertices().size()
                  << " facets " << p.facets().size();
    };
    line("dual", brute.sum);
    std::cout << " cone-intersections " << brute.coneIntersections << "\n";
    line("dual-opt", opt.sum);
    std::cout << " cone-intersections " << opt.coneIntersections << "\n";
    line("primal", primal.sum);
    std::cout << "\n";
    line("oracle", oracle);
    std::cout << "\n";
    std::cout << "intersection-count ratio dual-opt/dual: " << opt.coneIntersections
              << "/" << brute.coneIntersections << "\n";
    bool agree = brute.sum == opt.sum && brute.sum == primal.sum &&
                 brute.sum == oracle;
    std::cout << "methods agree: " << (agree ? "yes" : "no") << "\n";
    return agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Minkowski sums of convex polytopes"};
    app.require_subcommand(1);

    SumOptions sumOpt;
    auto* cmdSum = app.add_subcommand("sum", "compute A + B");
    cmdSum->add_option("A", sumOpt.fileA, "first summand (.ine/.ext)")->required();
    cmdSum->add_option("B", sumOpt.fileB, "second summand (.ine/.ext)")->required();
    cmdSum->add_option("--method", sumOpt.method, "dual | dual-opt | primal | oracle")
        ->check(CLI::IsMember({"dual", "dual-opt", "primal", "oracle"}));
    cmdSum->add_option("-o", sumOpt.outH, "write H-representation to file");
    cmdSum->add_option("--ext", sumOpt.outV, "write V-representation to file");
    cmdSum->add_flag("--witnesses", sumOpt.witnesses,
                     "append per-vertex witness decompositions as comments");
    cmdSum->add_flag("--check", sumOpt.check, "cross-validate against the oracle");

    std::string convertFile, convertTo, convertOut;
    auto* cmdConvert = app.add_subcommand("convert", "convert between H and V");
    cmdConvert->add_option("IN", convertFile, "input file")->required();
    cmdConvert->add_option("--to", convertTo, "target representation")
        ->required()
        ->check(CLI::IsMember({"H", "V"}));
    cmdConvert->add_option("-o", convertOut, "output file (default stdout)");

    std::string validateFile;
    auto* cmdValidate = app.add_subcommand("validate", "check a double description");
    cmdValidate->add_option("IN", validateFile, "input file")->required();

    std::string capA, capB;
    std::size_t capVertex = 0;
    auto* cmdCap = app.add_subcommand("cap", "polyhedral cap of a vertex of A in B");
    cmdCap->add_option("A", capA, "first summand")->required();
    cmdCap->add_option("B", capB, "second summand")->required();
    cmdCap->add_option("--vertex", capVertex, "vertex index in A")->required();

    std::string benchA, benchB;
    unsigned benchRepeat = 1;
    auto* cmdBench = app.add_subcommand("bench", "run and compare all methods");
    cmdBench->add_option("A", benchA, "first summand")->required();
    cmdBench->add_option("B", benchB, "second summand")->required();
    cmdBench->add_option("--repeat", benchRepeat, "repetitions per method")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cmdSum->parsed()) return runSum(sumOpt);
        if (cmdConvert->parsed()) return runConvert(convertFile, convertTo, convertOut);
        if (cmdValidate->parsed()) return runValidate(validateFile);
        if (cmdCap->parsed()) return runCap(capA, capB, capVertex);
        if (cmdBench->parsed()) return runBench(benchA, benchB, benchRepeat);
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const NotFullDimensional& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

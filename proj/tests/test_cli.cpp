#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sys/wait.h>

using std::filesystem::path;

namespace {

const path data_dir = UNLRDF_DATA_DIR;
const path cli = UNLRDF_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

path temp_dir() {
    static int counter = 0;
    path dir = std::filesystem::temp_directory_path() /
               ("unlrdf_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(++counter));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

RunResult run_cli(const std::string& args, const std::string& env = {}) {
    RunResult result;
    path err_file = temp_dir() / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + cli.string() + " " + args + " 2>" +
                      err_file.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.out.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = slurp(err_file);
    return result;
}

} // namespace

TEST_CASE("parse: fixture prints canonical text with exit 0") {
    RunResult r = run_cli("parse " + (data_dir / "R2.unl").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[S:R2]") == 0);
    CHECK(r.out.find("aoj:01(be_in_a_state(aoj>thing,icl>be,obj>state).@entry,"
                     "channel(icl>radiowave))") != std::string::npos);
}

TEST_CASE("parse: empty file is an empty document, exit 0") {
    path dir = temp_dir();
    spit(dir / "empty.unl", "");
    RunResult r = run_cli("parse " + (dir / "empty.unl").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("parse: truncated unl section exits 1 with a position") {
    path dir = temp_dir();
    spit(dir / "bad.unl", "[S:R]\n{unl}\nagt(a,b\n");
    RunResult r = run_cli("parse " + (dir / "bad.unl").string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("line") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("parse: validation failures exit 2") {
    path dir = temp_dir();
    spit(dir / "noentry.unl", "[S:R]\n{unl}\nagt(a,b)\n{/unl}\n[/S]\n");
    RunResult r = run_cli("parse " + (dir / "noentry.unl").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("entry") != std::string::npos);
}

TEST_CASE("missing input file exits 4") {
    RunResult r = run_cli("parse /nonexistent/nowhere.unl");
    CHECK(r.exit_code == 4);
}

TEST_CASE("serialize: reified and named-graphs outputs carry the scope") {
    RunResult reified =
        run_cli("serialize " + (data_dir / "R2.unl").string() + " --mode reified --counter-base 9");
    CHECK(reified.exit_code == 0);
    CHECK(reified.out.find("unl:has_scope example:UNL_Scope_00000017") != std::string::npos);

    RunResult graphs = run_cli("serialize " + (data_dir / "R2.unl").string() +
                               " --mode named-graphs --counter-base 9");
    CHECK(graphs.exit_code == 0);
    CHECK(graphs.out.find("example:UNL_Scope_00000017 {") != std::string::npos);
}

TEST_CASE("environment variables act as flag defaults") {
    RunResult flagged = run_cli("serialize " + (data_dir / "R2.unl").string() +
                                " --mode reified --counter-base 9");
    RunResult env = run_cli("serialize " + (data_dir / "R2.unl").string() + " --mode reified",
                            "UNLRDF_COUNTER_BASE=9");
    CHECK(env.exit_code == 0);
    CHECK(env.out == flagged.out);
}

TEST_CASE("convert: switching encodings matches direct serialization") {
    path dir = temp_dir();
    RunResult graphs = run_cli("serialize " + (data_dir / "R2.unl").string() +
                               " --mode named-graphs --counter-base 9");
    spit(dir / "r2.trig", graphs.out);
    RunResult converted = run_cli("convert " + (dir / "r2.trig").string() + " --to reified");
    RunResult direct =
        run_cli("serialize " + (data_dir / "R2.unl").string() + " --mode reified --counter-base 9");
    CHECK(converted.exit_code == 0);
    CHECK(converted.out == direct.out);
}

TEST_CASE("pipeline: R1+R2 exits with the inconsistency code and is reproducible") {
    path first = temp_dir();
    std::string inputs =
        (data_dir / "R1.unl").string() + " " + (data_dir / "R2.unl").string();
    RunResult r = run_cli("pipeline " + inputs + " --out " + first.string());
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("VIOLATION EnumerationViolation") != std::string::npos);
    CHECK(r.out.find("broadcast(icl>message)") != std::string::npos);
    for (const char* name : {"R1.trig", "R2.trig", "axioms.ttl", "report.txt"})
        CHECK_MESSAGE(std::filesystem::exists(first / name), name);

    // determinism oracle: a second run produces byte-identical files
    path second = temp_dir();
    run_cli("pipeline " + inputs + " --out " + second.string());
    for (const char* name : {"R1.trig", "R2.trig", "axioms.ttl", "report.txt"})
        CHECK_MESSAGE(slurp(first / name) == slurp(second / name), name);
}

TEST_CASE("pipeline: a single consistent file exits 0") {
    path dir = temp_dir();
    RunResult r = run_cli("pipeline " + (data_dir / "R2.unl").string() + " --out " +
                          dir.string());
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "report.txt"));
    CHECK(slurp(dir / "report.txt").find("consistent") != std::string::npos);
}

TEST_CASE("check: extracted facts exit 3, consistent input exits 0, empty exits 0") {
    path dir = temp_dir();
    run_cli("pipeline " + (data_dir / "R1.unl").string() + " " +
            (data_dir / "R2.unl").string() + " --out " + dir.string());
    RunResult facts = run_cli("check " + (dir / "axioms.ttl").string());
    CHECK(facts.exit_code == 3);
    CHECK(facts.out.find("VIOLATION EnumerationViolation") != std::string::npos);

    path consistent_dir = temp_dir();
    run_cli("pipeline " + (data_dir / "R1.unl").string() + " --out " +
            consistent_dir.string());
    RunResult consistent = run_cli("check " + (consistent_dir / "axioms.ttl").string());
    CHECK(consistent.exit_code == 0);

    spit(dir / "empty.ttl", "");
    RunResult empty = run_cli("check " + (dir / "empty.ttl").string());
    CHECK(empty.exit_code == 0);
}

TEST_CASE("extract: named-graphs input converts and matches the reified path") {
    path dir = temp_dir();
    RunResult graphs = run_cli("serialize " + (data_dir / "R2.unl").string() +
                               " --mode named-graphs --counter-base 9");
    RunResult reified = run_cli("serialize " + (data_dir / "R2.unl").string() +
                                " --mode reified --counter-base 9");
    spit(dir / "ng.trig", graphs.out);
    spit(dir / "re.ttl", reified.out);
    RunResult from_graphs = run_cli("extract " + (dir / "ng.trig").string());
    RunResult from_reified = run_cli("extract " + (dir / "re.ttl").string());
    CHECK(from_graphs.exit_code == 0);
    CHECK(from_graphs.out == from_reified.out);
    CHECK(from_graphs.out.find("owl:DatatypeProperty") != std::string::npos);

    spit(dir / "none.ttl", "");
    RunResult empty = run_cli("extract " + (dir / "none.ttl").string());
    CHECK(empty.exit_code == 0);
}

TEST_CASE("schema subcommand emits the vocabulary schema") {
    RunResult r = run_cli("schema");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("unl:ant") != std::string::npos);
    CHECK(r.out.find("\"opposition or concession\"@en") != std::string::npos);
    CHECK(r.out.find(".@zoomorphism") != std::string::npos);

    RunResult bare = run_cli("schema --no-attributes");
    CHECK(bare.out.find(".@zoomorphism") == std::string::npos);
}

TEST_CASE("pipeline per-sentence files match standalone serialization") {
    path dir = temp_dir();
    run_cli("pipeline " + (data_dir / "R1.unl").string() + " " +
            (data_dir / "R2.unl").string() + " --out " + dir.string());
    RunResult standalone = run_cli("serialize " + (data_dir / "R2.unl").string() +
                                   " --mode reified --counter-base 9");
    CHECK(slurp(dir / "R2.trig") == standalone.out);
    CHECK(slurp(dir / "R2.trig") == slurp(data_dir / "golden" / "R2.reified.ttl"));
}

TEST_CASE("pipeline axioms match the frozen golden file") {
    path dir = temp_dir();
    run_cli("pipeline " + (data_dir / "R1.unl").string() + " " +
            (data_dir / "R2.unl").string() + " --out " + dir.string());
    CHECK(slurp(dir / "axioms.ttl") == slurp(data_dir / "golden" / "axioms.ttl"));
}

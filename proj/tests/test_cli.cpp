#include "doctest.h"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" KSTATES_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string last_line(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.back() == '\n') t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

} // namespace

TEST_CASE("poly") {
    CHECK(run("poly 2 2 --method closed --format coeffs").out == "0 5 8 3\n");
    CHECK(run("poly 0 0").out == "0 1\n");
    CHECK(run("poly 3 inf --method closed").out == "0 3 4 1\n");
    CHECK(run("poly 2 2 --format human").out == "5x + 8x^2 + 3x^3\n");
    for (const char* m : {"closed", "recurrence", "classes", "enumerate"})
        CHECK(run(std::string("poly 4 3 --method ") + m).out == run("poly 3 4").out);
}

TEST_CASE("coeff") {
    CHECK(run("coeff 7 7 1").out == "50\n");
    CHECK(run("coeff 2 2 9").out == "0\n");
    CHECK(run("coeff 6 6 5").out == "952\n");
}

TEST_CASE("enumerate") {
    CHECK(run("enumerate 2 2").out == "0 5 8 3\n");
    CHECK(run("enumerate 1 1 --histogram").out == "1 2\n2 2\n");
    CHECK(run("enumerate 0 0").out == "0 1\n");
}

TEST_CASE("table") {
    Run r = run("table bnr1 --rows 8 --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 8);
    CHECK(r.out.rfind("1,1,1,1,1,1,1,1\n", 0) == 0);
    CHECK(last_line(run("table degree").out) == "8,8,8,9,10,11,12,13");
    CHECK(run("table bn0k --rows 1").out == "0,1\n");
}

TEST_CASE("seq") {
    CHECK(run("seq bnr1 --terms 4 --order by-antidiagonals").out == "0 1\n1 1\n2 1\n3 1\n");
    CHECK(run("seq leading --terms 1").out == "0 1\n");
    CHECK(run("seq degree --terms 2").out == "0 1\n1 2\n");
}

TEST_CASE("verify") {
    CHECK(run("verify").code == 0);
    CHECK(run("verify --max-n 0 --max-r 0").code == 0);
    Run bad = run("verify --inject-fault 2,3,1");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("n=2 r=3 k=1") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("poly inf inf").code == 2);
    CHECK(run("table nope").code == 2);
    CHECK(run("poly -1 2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("enumerate 2 2", "KSTATES_MAX_CROSSINGS=3").code == 3);
    CHECK(run("enumerate 2 2", "KSTATES_MAX_CROSSINGS=banana").code == 2);
    CHECK(run("poly 200 200").code == 3);
}

TEST_CASE("coeffs output round-trips through coeff") {
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= 4; ++r) {
            std::istringstream in(run("poly " + std::to_string(n) + " " + std::to_string(r)).out);
            long long c = 0;
            for (int k = 0; in >> c; ++k)
                CHECK(run("coeff " + std::to_string(n) + " " + std::to_string(r) + " " + std::to_string(k)).out ==
                      std::to_string(c) + "\n");
        }
}

// Acceptance gate: one PASS/FAIL line per criterion. Criteria 1..11 run the
// library suites in-process; criterion 12 drives the command-line tool.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "penta/cosexp.hpp"
#include "penta/selftest.hpp"

namespace {

struct Captured {
    int status = -1;
    std::string out;
    double seconds = 0.0;
};

Captured run(const std::string& command) {
    Captured c;
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return c;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

/// Every value of the CSV must be the double g5_closed returns for the
/// row's y, compared bit for bit after parsing the 17-digit text.
bool table_matches(const std::string& csv, std::string& detail) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    if (line != "y,g50,g51,g52,g53,g54") {
        detail = "unexpected header '" + line + "'";
        return false;
    }
    std::size_t rows = 0, values = 0;
    bool saw_origin = false;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<double> cols;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) cols.push_back(std::strtod(field.c_str(), nullptr));
        if (cols.size() != 6) {
            detail = "row " + std::to_string(rows) + " has " + std::to_string(cols.size()) + " columns";
            return false;
        }
        for (int k = 0; k < 5; ++k) {
            const double want = penta::g5_closed(k, cols[0]);
            if (std::memcmp(&want, &cols[static_cast<std::size_t>(k) + 1], sizeof want) != 0) {
                detail = "row " + std::to_string(rows) + ", g5" + std::to_string(k) + " differs from g5_closed";
                return false;
            }
            ++values;
        }
        if (cols[0] == 0.0) {
            saw_origin = line == "0,1,0,0,0,0";
            if (!saw_origin) detail = "row y = 0 reads '" + line + "'";
        }
    }
    if (rows != 161 || !saw_origin) {
        if (detail.empty()) detail = "expected 161 rows including y = 0, got " + std::to_string(rows);
        return false;
    }
    detail = std::to_string(values) + " values bit-identical over " + std::to_string(rows) + " rows";
    return true;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&failures](int id, const std::string& name, bool passed, double seconds, const std::string& detail) {
        std::printf("criterion %2d %-34s %s  (%.3f s) %s\n", id, name.c_str(), passed ? "PASS" : "FAIL", seconds,
                    detail.c_str());
        if (!passed) ++failures;
    };

    for (const auto& suite : penta::selftest::suites()) {
        const auto r = penta::selftest::run(suite);
        report(r.id, r.name, r.passed, r.seconds, r.detail);
    }

    const std::string cli = PENTA_CLI_PATH;
    const Captured self = run("\"" + cli + "\" selftest");
    const bool self_ok = self.status == 0 && self.seconds < 30.0;
    const Captured table = run("\"" + cli + "\" cosexp-table --from -4 --to 4 --step 0.05");
    std::string table_detail;
    const bool table_ok = table.status == 0 && table_matches(table.out, table_detail);
    std::ostringstream detail;
    detail << "selftest exit " << self.status << " in " << self.seconds << " s; cosexp-table: " << table_detail;
    report(12, "command line", self_ok && table_ok, self.seconds + table.seconds, detail.str());

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

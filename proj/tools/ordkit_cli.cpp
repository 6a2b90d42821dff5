// ordkit command line: runs a session script (`ordkit run <file>`, `-` for
// stdin) or a single command given as arguments.  --json switches reports to
// one JSON object per line; see README for the command grammar.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ordkit/session.hpp"

namespace {

void print_report(const ordkit::Report& r, bool json) {
    if (json) {
        std::cout << r.data.dump() << "\n";
    } else if (r.exit_code != 0) {
        std::cout << "error: " << r.data.value("error", "") << "\n";
    } else {
        std::cout << r.text() << "\n";
    }
}

int usage() {
    std::cerr << "usage: ordkit [flags] run <script|->\n"
              << "       ordkit [flags] <command...>\n"
              << "flags: --json  --height <k>  --eps <p/q>  --cap <n>  --refine-cap <n>\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    ordkit::Session session;
    size_t i = 0;
    while (i < args.size() && args[i].rfind("--", 0) == 0) {
        auto take_value = [&]() -> std::string {
            if (i + 1 >= args.size()) {
                usage();
                exit(2);
            }
            std::string v = args[i + 1];
            i += 2;
            return v;
        };
        if (args[i] == "--json") {
            json = true;
            ++i;
        } else if (args[i] == "--refine-cap") {
            session.registry()->config().refine_cap = std::stol(take_value());
        } else if (args[i] == "--height") {
            session.config().default_height = std::stoi(take_value());
        } else if (args[i] == "--cap") {
            session.config().default_cap = std::stol(take_value());
        } else if (args[i] == "--eps") {
            session.config().default_eps = ordkit::parse_rat(take_value());
        } else {
            return usage();
        }
    }
    if (i >= args.size()) return usage();

    if (args[i] == "run") {
        if (i + 1 >= args.size()) return usage();
        std::string path = args[i + 1];
        std::istream* in = &std::cin;
        std::ifstream file;
        if (path != "-") {
            file.open(path);
            if (!file) {
                std::cerr << "error: cannot open " << path << "\n";
                return 2;
            }
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            ordkit::Report r = session.run_line(line);
            print_report(r, json);
            if (r.exit_code != 0) return r.exit_code;
        }
        return 0;
    }

    std::ostringstream cmd;
    for (size_t j = i; j < args.size(); ++j) {
        if (j > i) cmd << " ";
        bool needs_quotes = args[j].find(' ') != std::string::npos && args[j].front() != '[' &&
                            args[j].front() != '(' && args[j].front() != '{';
        if (needs_quotes)
            cmd << '"' << args[j] << '"';
        else
            cmd << args[j];
    }
    ordkit::Report r = session.run_line(cmd.str());
    print_report(r, json);
    return r.exit_code;
}

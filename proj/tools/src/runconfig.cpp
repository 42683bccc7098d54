#include "runconfig.hpp"

#include <charconv>
#include <sstream>

#include "ringwalk/errors.hpp"

namespace ringwalk::cli {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_int(long long value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string RunConfig::text() const {
    std::ostringstream os;
    os << "subcommand = " << subcommand << "\n";
    for (const auto& [key, value] : options) {
        os << key << " = " << value << "\n";
    }
    return os.str();
}

RunConfig RunConfig::parse_text(const std::string& text) {
    RunConfig config;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "config line " << line_no << " is not 'key = value': " << stripped;
            throw ConstraintError(os.str());
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream os;
            os << "config line " << line_no << " has an empty key";
            throw ConstraintError(os.str());
        }
        if (key == "subcommand") {
            config.subcommand = value;
        } else {
            config.options[key] = value;
        }
    }
    return config;
}

const std::string& RunConfig::raw(const std::string& key) const {
    const auto it = options.find(key);
    if (it == options.end()) {
        throw ConstraintError("missing configuration key '" + key + "'");
    }
    return it->second;
}

int RunConfig::get_int(const std::string& key) const {
    const std::string& s = raw(key);
    int value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConstraintError("option '" + key + "' expects an integer, got '" + s + "'");
    }
    return value;
}

double RunConfig::get_double(const std::string& key) const {
    const std::string& s = raw(key);
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConstraintError("option '" + key + "' expects a number, got '" + s + "'");
    }
    return value;
}

bool RunConfig::get_bool(const std::string& key) const {
    const std::string& s = raw(key);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConstraintError("option '" + key + "' expects true|false, got '" + s + "'");
}

const std::string& RunConfig::get_string(const std::string& key) const { return raw(key); }

std::pair<int, int> RunConfig::get_range(const std::string& key) const {
    const std::string& s = raw(key);
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw ConstraintError("option '" + key + "' expects a range lo:hi, got '" + s + "'");
    }
    int lo = 0, hi = 0;
    const auto r1 = std::from_chars(s.data(), s.data() + colon, lo);
    const auto r2 = std::from_chars(s.data() + colon + 1, s.data() + s.size(), hi);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != s.data() + colon ||
        r2.ptr != s.data() + s.size() || hi < lo) {
        throw ConstraintError("option '" + key + "' expects a range lo:hi, got '" + s + "'");
    }
    return {lo, hi};
}

}  // namespace ringwalk::cli

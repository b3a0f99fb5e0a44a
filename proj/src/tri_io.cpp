#include "thinsphere/tri_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace thinsphere {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
    std::vector<std::array<std::int64_t, 3>> faces;
    std::set<std::array<std::int64_t, 3>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::array<std::int64_t, 3> f{};
        int count = 0;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            if (p == end) break;
            std::int64_t value = 0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t'))
                throw ParseError(line_no, "expected nonnegative integers, got '" + std::string(line) + "'");
            if (value < 0) throw ParseError(line_no, "negative vertex id");
            if (count == 3) throw ParseError(line_no, "more than three vertices on a face line");
            f[count++] = value;
            p = next;
        }
        if (count != 3) throw ParseError(line_no, "expected three vertex ids, got " + std::to_string(count));
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) throw ParseError(line_no, "repeated vertex in face");

        auto key = f;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate face");
        faces.push_back(f);
    }
    return Triangulation::from_faces(faces);
}

std::string serialize_triangulation(const Triangulation& t) {
    std::ostringstream os;
    for (const Face& f : t.faces()) os << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    return os.str();
}

Triangulation read_tri_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangulation(buf.str());
}

void write_tri_file(const std::filesystem::path& path, const Triangulation& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_triangulation(t);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace thinsphere

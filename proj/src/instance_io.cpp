#include "cluspt/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cluspt/rng.hpp"

namespace cluspt {

namespace {

std::string fmt_real(double x) {
    if (x == kNoEdge) return "INF";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Cursor {
    std::vector<std::string> lines;
    std::size_t pos = 0;  // next line to consume

    int line_no() const { return static_cast<int>(pos); }  // 1-based, for the line just read

    bool done() const { return pos >= lines.size(); }

    // Next non-blank line, trimmed. Returns nullopt at end of input.
    std::optional<std::string> next() {
        while (pos < lines.size()) {
            const std::string& raw = lines[pos++];
            std::size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = raw.find_last_not_of(" \t\r");
            return raw.substr(b, e - b + 1);
        }
        return std::nullopt;
    }
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, int line) {
    long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

double parse_real(const std::string& tok, int line) {
    std::string upper = tok;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (upper == "INF" || upper == "INFINITY" || upper == "+INF") return kNoEdge;
    try {
        std::size_t used = 0;
        const double value = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a real number, got '" + tok + "'");
    }
}

} // namespace

InstanceFile parse_file(std::string_view text) {
    Cursor cur;
    {
        std::string line;
        std::istringstream in{std::string(text)};
        while (std::getline(in, line)) cur.lines.push_back(line);
    }

    InstanceFile file;
    std::map<std::string, std::string> headers;
    std::optional<std::string> line;
    std::string section;

    // Header block: KEY: value lines until the first section marker.
    while ((line = cur.next())) {
        const std::string& s = *line;
        if (s == "NODE_COORD_SECTION" || s == "EDGE_WEIGHT_SECTION" || s == "CLUSTER_SECTION" ||
            s == "EOF") {
            section = s;
            break;
        }
        const std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError(cur.line_no(), "expected 'KEY: value' or a section marker, got '" + s + "'");
        std::string key = s.substr(0, colon);
        std::string value = s.substr(colon + 1);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        const std::size_t vb = value.find_first_not_of(" \t");
        value = (vb == std::string::npos) ? "" : value.substr(vb);
        if (headers.count(key))
            throw ParseError(cur.line_no(), "duplicate header key " + key);
        if (value.empty())
            throw ParseError(cur.line_no(), "header key " + key + " has no value");
        headers[key] = value;
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = headers.find(key);
        if (it == headers.end()) return std::nullopt;
        std::string v = it->second;
        headers.erase(it);
        return v;
    };
    auto require = [&](const char* key) -> std::string {
        auto v = take(key);
        if (!v) throw ParseError(cur.line_no(), std::string("missing mandatory key ") + key);
        return *v;
    };

    if (auto name = take("NAME")) file.name = *name;
    const std::string type = require("TYPE");
    if (type != "CluSPT")
        throw ParseError(cur.line_no(), "TYPE must be CluSPT, got '" + type + "'");
    file.dimension = static_cast<int>(parse_int(require("DIMENSION"), cur.line_no()));
    if (file.dimension < 1) throw ParseError(cur.line_no(), "DIMENSION must be >= 1");
    file.cluster_count =
        static_cast<int>(parse_int(require("NUMBER_OF_CLUSTERS"), cur.line_no()));
    if (file.cluster_count < 1)
        throw ParseError(cur.line_no(), "NUMBER_OF_CLUSTERS must be >= 1");
    if (auto src = take("SOURCE_VERTEX"))
        file.source = static_cast<Vertex>(parse_int(*src, cur.line_no()));

    const std::string ewt = require("EDGE_WEIGHT_TYPE");
    if (ewt == "EUC_2D") {
        file.euclidean = true;
    } else if (ewt == "EXPLICIT") {
        file.euclidean = false;
        const std::string fmt = require("EDGE_WEIGHT_FORMAT");
        if (fmt != "FULL_MATRIX")
            throw ParseError(cur.line_no(), "unsupported EDGE_WEIGHT_FORMAT '" + fmt + "'");
    } else {
        throw ParseError(cur.line_no(), "EDGE_WEIGHT_TYPE must be EUC_2D or EXPLICIT, got '" + ewt + "'");
    }
    if (!headers.empty())
        throw ParseError(cur.line_no(), "unknown header key " + headers.begin()->first);

    const int n = file.dimension;

    if (file.euclidean) {
        if (section != "NODE_COORD_SECTION")
            throw ParseError(cur.line_no(), "expected NODE_COORD_SECTION, got '" + section + "'");
        file.coords.assign(static_cast<std::size_t>(n), Point{});
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            line = cur.next();
            if (!line) throw ParseError(cur.line_no(), "unexpected end of input in NODE_COORD_SECTION");
            const auto toks = split_tokens(*line);
            if (toks.size() != 3)
                throw ParseError(cur.line_no(), "coordinate line needs '<id> <x> <y>'");
            const long id = parse_int(toks[0], cur.line_no());
            if (id < 1 || id > n)
                throw ParseError(cur.line_no(), "coordinate id " + std::to_string(id) + " out of range");
            if (seen[static_cast<std::size_t>(id - 1)])
                throw ParseError(cur.line_no(), "duplicate coordinate id " + std::to_string(id));
            seen[static_cast<std::size_t>(id - 1)] = 1;
            file.coords[static_cast<std::size_t>(id - 1)] = {parse_real(toks[1], cur.line_no()),
                                                             parse_real(toks[2], cur.line_no())};
        }
    } else {
        if (section != "EDGE_WEIGHT_SECTION")
            throw ParseError(cur.line_no(), "expected EDGE_WEIGHT_SECTION, got '" + section + "'");
        file.weights.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; ++i) {
            line = cur.next();
            if (!line) throw ParseError(cur.line_no(), "unexpected end of input in EDGE_WEIGHT_SECTION");
            const auto toks = split_tokens(*line);
            if (static_cast<int>(toks.size()) != n)
                throw ParseError(cur.line_no(), "matrix row " + std::to_string(i + 1) + " has " +
                                                    std::to_string(toks.size()) + " entries, expected " +
                                                    std::to_string(n));
            auto& row = file.weights[static_cast<std::size_t>(i)];
            row.reserve(static_cast<std::size_t>(n));
            for (const auto& tok : toks) row.push_back(parse_real(tok, cur.line_no()));
        }
    }

    line = cur.next();
    if (!line || *line != "CLUSTER_SECTION")
        throw ParseError(cur.line_no(), "expected CLUSTER_SECTION");
    file.clusters.assign(static_cast<std::size_t>(file.cluster_count), {});
    std::vector<char> cluster_seen(static_cast<std::size_t>(file.cluster_count), 0);
    for (int c = 0; c < file.cluster_count; ++c) {
        line = cur.next();
        if (!line) throw ParseError(cur.line_no(), "unexpected end of input in CLUSTER_SECTION");
        const auto toks = split_tokens(*line);
        if (toks.size() < 3 || toks.back() != "-1")
            throw ParseError(cur.line_no(), "cluster line needs '<id> <v1> ... -1'");
        const long id = parse_int(toks[0], cur.line_no());
        if (id < 1 || id > file.cluster_count)
            throw ParseError(cur.line_no(), "cluster id " + std::to_string(id) + " out of range 1.." +
                                                std::to_string(file.cluster_count));
        if (cluster_seen[static_cast<std::size_t>(id - 1)])
            throw ParseError(cur.line_no(), "duplicate cluster id " + std::to_string(id));
        cluster_seen[static_cast<std::size_t>(id - 1)] = 1;
        auto& members = file.clusters[static_cast<std::size_t>(id - 1)];
        for (std::size_t t = 1; t + 1 < toks.size(); ++t)
            members.push_back(static_cast<Vertex>(parse_int(toks[t], cur.line_no())));
    }

    line = cur.next();
    if (!line || *line != "EOF") throw ParseError(cur.line_no(), "expected EOF");
    if ((line = cur.next()))
        throw ParseError(cur.line_no(), "trailing content after EOF");
    return file;
}

ClusteredInstance to_instance(const InstanceFile& file, std::optional<Vertex> source_override) {
    std::optional<Vertex> source = source_override ? source_override : file.source;
    if (!source)
        throw InputError("missing mandatory key SOURCE_VERTEX (use headless mode to draw one)");
    if (file.euclidean)
        return ClusteredInstance::from_coords(file.name, file.coords, file.clusters, *source);
    return ClusteredInstance::from_matrix(file.name, file.weights, file.clusters, *source);
}

ClusteredInstance parse_instance(std::string_view text) {
    return to_instance(parse_file(text));
}

std::string write_instance(const ClusteredInstance& inst) {
    std::ostringstream out;
    out << "NAME: " << inst.name() << "\n";
    out << "TYPE: CluSPT\n";
    out << "DIMENSION: " << inst.vertex_count() << "\n";
    out << "NUMBER_OF_CLUSTERS: " << inst.cluster_count() << "\n";
    out << "SOURCE_VERTEX: " << inst.source() << "\n";
    if (inst.euclidean()) {
        out << "EDGE_WEIGHT_TYPE: EUC_2D\n";
        out << "NODE_COORD_SECTION\n";
        for (int v = 1; v <= inst.vertex_count(); ++v) {
            const Point& p = inst.coords()[static_cast<std::size_t>(v - 1)];
            out << v << " " << fmt_real(p.x) << " " << fmt_real(p.y) << "\n";
        }
    } else {
        out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
        out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
        out << "EDGE_WEIGHT_SECTION\n";
        for (int i = 0; i < inst.vertex_count(); ++i) {
            const auto& row = inst.weight_matrix()[static_cast<std::size_t>(i)];
            for (int j = 0; j < inst.vertex_count(); ++j)
                out << (j ? " " : "") << fmt_real(row[static_cast<std::size_t>(j)]);
            out << "\n";
        }
    }
    out << "CLUSTER_SECTION\n";
    for (int c = 0; c < inst.cluster_count(); ++c) {
        out << (c + 1);
        for (Vertex v : inst.cluster(c)) out << " " << v;
        out << " -1\n";
    }
    out << "EOF\n";
    return out.str();
}

SourceAugmentation augment_source(const InstanceFile& file, std::uint64_t seed) {
    if (file.source)
        throw InputError("instance '" + file.name + "' already declares SOURCE_VERTEX " +
                         std::to_string(*file.source));
    if (file.dimension < 1) throw InputError("instance has no vertices");
    Rng rng(seed);
    SourceAugmentation aug;
    aug.instance_name = file.name;
    aug.seed = seed;
    aug.source = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(file.dimension)));
    return aug;
}

ClusteredInstance load_instance_file(const std::string& path, bool headless,
                                     std::uint64_t augment_seed,
                                     SourceAugmentation* augmentation) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    InstanceFile file = parse_file(buf.str());
    if (!file.source && headless) {
        const SourceAugmentation aug = augment_source(file, augment_seed);
        if (augmentation) *augmentation = aug;
        return to_instance(file, aug.source);
    }
    return to_instance(file);
}

} // namespace cluspt

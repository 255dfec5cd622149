#include "minrank/catalog_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace minrank {

void write_catalog(std::ostream& out, const ForbiddenCatalog& catalog)
{
    auto members = catalog.members;
    std::sort(members.begin(), members.end(), [](const CatalogMember& a, const CatalogMember& b) { return a.form < b.form; });
    out << "# minrank forbidden catalog\n";
    out << "# field " << catalog.field.p() << "\n";
    out << "# k " << catalog.k << "\n";
    out << "# source " << catalog.provenance.source << "\n";
    out << "# max_n " << catalog.provenance.max_n << "\n";
    out << "# budget " << catalog.provenance.budget << "\n";
    out << "# engine " << catalog.provenance.engine << "\n";
    out << "# members " << members.size() << "\n";
    for (const auto& m : members)
        out << m.graph6 << "\n";
}

std::string catalog_text(const ForbiddenCatalog& catalog)
{
    std::ostringstream os;
    write_catalog(os, catalog);
    return os.str();
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& s, const std::string& key)
{
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw CatalogFormatError("bad value for catalog header '" + key + "': " + s);
    return value;
}

} // namespace

ForbiddenCatalog read_catalog(std::istream& in)
{
    std::map<std::string, std::string> header;
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty())
            continue;
        if (t[0] == '#') {
            const auto body = trim(t.substr(1));
            const auto sp = body.find(' ');
            if (sp != std::string::npos)
                header[body.substr(0, sp)] = trim(body.substr(sp + 1));
            continue;
        }
        try {
            graphs.push_back(graph6_decode(t));
        } catch (const GraphFormatError& e) {
            throw CatalogFormatError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (const char* key : {"field", "k"})
        if (!header.count(key))
            throw CatalogFormatError(std::string("catalog header lacks '") + key + "'");

    const int p = parse_number<int>(header["field"], "field");
    if (!FieldSpec::is_supported(p))
        throw CatalogFormatError("unsupported field in catalog: " + header["field"]);
    ForbiddenCatalog cat{FieldSpec(p), parse_number<int>(header["k"], "k"), {}, {}};
    cat.provenance.source = header.count("source") ? header["source"] : "file";
    cat.provenance.max_n = header.count("max_n") ? parse_number<int>(header["max_n"], "max_n") : 0;
    cat.provenance.budget = header.count("budget") ? parse_number<std::uint64_t>(header["budget"], "budget") : 0;
    cat.provenance.engine = header.count("engine") ? header["engine"] : "";
    for (const auto& g : graphs)
        cat.members.push_back(make_member(g));
    std::sort(cat.members.begin(), cat.members.end(), [](const CatalogMember& a, const CatalogMember& b) { return a.form < b.form; });
    if (header.count("members") && parse_number<std::size_t>(header["members"], "members") != cat.members.size())
        throw CatalogFormatError("catalog member count does not match its header");
    return cat;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        try {
            out.push_back(graph6_decode(t));
        } catch (const GraphFormatError& e) {
            throw CatalogFormatError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

} // namespace minrank

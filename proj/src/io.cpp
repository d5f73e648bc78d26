#include "ladr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ladr/error.hpp"

namespace ladr {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON");
    return doc;
}

Rational rational_from_json(const json& v, bool lossy, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>(), lossy);
    if (v.is_number_unsigned())
        return Rational(Integer(std::to_string(v.get<unsigned long long>())));
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_number_float()) {
        if (!lossy)
            throw ParseError("decimal number in " + where +
                             "; use an exact rational or enable lossy input");
        return Rational(v.get<double>());
    }
    throw ParseError("expected a number or rational string in " + where);
}

json rational_to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
    return json(format_rational(r));
}

long integer_field(const json& v, const std::string& where) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError("field \"" + where + "\" must be an integer");
    return v.get<long>();
}

const json& require(const json& obj, const char* key, const std::string& what) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(what + " is missing field \"" + key + "\"");
    return obj.at(key);
}

}  // namespace

Instance parse_instance_json(const std::string& text, bool lossy) {
    const json doc = parse_json(text);
    const json& arr = require(doc, "rectangles", "instance document");
    if (!arr.is_array() || arr.empty())
        throw ParseError("\"rectangles\" must be a non-empty array");
    std::vector<Rect> rects;
    Layout layout;
    for (const json& e : arr) {
        const json& id_field = require(e, "id", "rectangle entry");
        if (!id_field.is_string()) throw ParseError("rectangle id must be a string");
        const std::string id = id_field.get<std::string>();
        Rect r;
        r.id = id;
        r.w = integer_field(require(e, "w", "rectangle entry"), "w");
        r.h = integer_field(require(e, "h", "rectangle entry"), "h");
        rects.push_back(r);
        layout.place(id, Point{rational_from_json(require(e, "x", "rectangle entry"), lossy, "x"),
                               rational_from_json(require(e, "y", "rectangle entry"), lossy, "y")});
    }
    try {
        return Instance(std::move(rects), std::move(layout));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string format_instance_json(const Instance& instance) {
    json arr = json::array();
    for (const Rect& r : instance.rects()) {
        const Point& p = instance.initial().at(r.id);
        arr.push_back(json{{"id", r.id},
                           {"w", r.w},
                           {"h", r.h},
                           {"x", rational_to_json(p.x)},
                           {"y", rational_to_json(p.y)}});
    }
    return json{{"rectangles", std::move(arr)}}.dump(2) + "\n";
}

Layout parse_layout_json(const std::string& text, bool lossy) {
    const json doc = parse_json(text);
    const json& arr = require(doc, "positions", "layout document");
    if (!arr.is_array()) throw ParseError("\"positions\" must be an array");
    Layout layout;
    for (const json& e : arr) {
        const json& id_field = require(e, "id", "position entry");
        if (!id_field.is_string()) throw ParseError("position id must be a string");
        const std::string id = id_field.get<std::string>();
        if (layout.has(id)) throw ParseError("duplicate position id \"" + id + "\"");
        layout.place(id, Point{rational_from_json(require(e, "x", "position entry"), lossy, "x"),
                               rational_from_json(require(e, "y", "position entry"), lossy, "y")});
    }
    return layout;
}

std::string format_layout_json(const Layout& layout) {
    json arr = json::array();
    for (const auto& [id, p] : layout.centers())
        arr.push_back(
            json{{"id", id}, {"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}});
    return json{{"positions", std::move(arr)}}.dump(2) + "\n";
}

PointSet parse_points_json(const std::string& text, bool lossy) {
    const json doc = parse_json(text);
    if (!doc.is_array()) throw ParseError("points document must be an array of [x, y] pairs");
    PointSet points;
    for (const json& e : doc) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each point must be an [x, y] pair");
        points.pts.push_back(Point{rational_from_json(e.at(0), lossy, "point x"),
                                   rational_from_json(e.at(1), lossy, "point y")});
    }
    return points;
}

std::string format_points_json(const PointSet& points) {
    json arr = json::array();
    for (const Point& p : points.pts)
        arr.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    return arr.dump(2) + "\n";
}

LineSet parse_lines_json(const std::string& text, bool lossy) {
    const json doc = parse_json(text);
    LineSet lines;
    const json& hs = require(doc, "horizontals", "lines document");
    const json& vs = require(doc, "verticals", "lines document");
    if (!hs.is_array() || !vs.is_array())
        throw ParseError("\"horizontals\" and \"verticals\" must be arrays");
    for (const json& e : hs) lines.horizontals.push_back(rational_from_json(e, lossy, "horizontal"));
    for (const json& e : vs) lines.verticals.push_back(rational_from_json(e, lossy, "vertical"));
    lines.normalize();
    return lines;
}

std::string format_lines_json(const LineSet& lines) {
    json hs = json::array();
    json vs = json::array();
    for (const Rational& y : lines.horizontals) hs.push_back(rational_to_json(y));
    for (const Rational& x : lines.verticals) vs.push_back(rational_to_json(x));
    return json{{"horizontals", std::move(hs)}, {"verticals", std::move(vs)}}.dump(2) + "\n";
}

std::string format_gadget_meta_json(const GadgetInstance& gadget) {
    json labels = json::array();
    for (const std::string& label : gadget.labels) labels.push_back(label);
    json doc{{"n", gadget.formula.n},
             {"m", gadget.formula.m},
             {"k", gadget.k},
             {"points", gadget.points.size()},
             {"epsilon_sep", format_rational(gadget.epsilon_sep)},
             {"labels", std::move(labels)}};
    return doc.dump(2) + "\n";
}

std::pair<int, std::vector<std::array<int, 3>>> parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = 0, m_declared = -1;
    std::string body;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        if (line[start] == '%') break;
        if (line[start] == 'p') {
            if (m_declared >= 0) throw ParseError("duplicate DIMACS header");
            std::istringstream header(line.substr(start));
            std::string p, fmt;
            if (!(header >> p >> fmt >> n >> m_declared) || fmt != "cnf" || n < 1 ||
                m_declared < 1)
                throw ParseError("bad DIMACS header: '" + line + "'");
            continue;
        }
        body += line;
        body += ' ';
    }
    if (m_declared < 0) throw ParseError("missing DIMACS header 'p cnf n m'");

    std::istringstream tokens(body);
    long lit = 0;
    std::vector<int> current;
    std::vector<std::array<int, 3>> clauses;
    while (tokens >> lit) {
        if (lit == 0) {
            if (current.size() != 3)
                throw ParseError("clause " + std::to_string(clauses.size() + 1) + " has " +
                                 std::to_string(current.size()) + " literals, expected 3");
            clauses.push_back({current[0], current[1], current[2]});
            current.clear();
        } else {
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!tokens.eof()) throw ParseError("bad token in DIMACS clause data");
    if (!current.empty()) {
        if (current.size() != 3)
            throw ParseError("trailing clause has " + std::to_string(current.size()) +
                             " literals, expected 3");
        clauses.push_back({current[0], current[1], current[2]});
    }
    if (static_cast<long>(clauses.size()) != m_declared)
        throw ParseError("clause count " + std::to_string(clauses.size()) +
                         " differs from header " + std::to_string(m_declared));
    return {static_cast<int>(n), std::move(clauses)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace ladr

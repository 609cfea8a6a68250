#include "setcalc/io/document.hpp"

namespace setcalc::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw DocumentError((path.empty() ? std::string("document") : path) + ": " + message);
}

const json& field(const json& node, const char* name, const std::string& path) {
    const auto it = node.find(name);
    if (it == node.end()) {
        fail(path, std::string("missing field \"") + name + "\"");
    }
    return *it;
}

double number(const json& node, const std::string& path) {
    if (!node.is_number()) {
        fail(path, "expected a number");
    }
    return node.get<double>();
}

Vector vector(const json& node, const std::string& path) {
    if (!node.is_array()) {
        fail(path, "expected an array of numbers");
    }
    Vector v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = number(node[i], path + "[" + std::to_string(i) + "]");
    }
    return v;
}

// Row-major array of arrays; `rows` fixes the row count of an empty matrix.
Matrix matrix(const json& node, const std::string& path, Eigen::Index rows_hint = -1) {
    if (!node.is_array()) {
        fail(path, "expected an array of rows");
    }
    if (node.empty()) {
        return Matrix(std::max<Eigen::Index>(rows_hint, 0), 0);
    }
    const auto rows = static_cast<Eigen::Index>(node.size());
    Eigen::Index cols = -1;
    Matrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        const Vector row = vector(node[static_cast<std::size_t>(i)], row_path);
        if (cols < 0) {
            cols = row.size();
            m.resize(rows, cols);
        } else if (row.size() != cols) {
            fail(row_path, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        m.row(i) = row.transpose();
    }
    return m;
}

std::vector<Vector> points(const json& node, const std::string& path) {
    if (!node.is_array()) {
        fail(path, "expected an array of points");
    }
    std::vector<Vector> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(vector(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<HalfSpace> halfspaces(const json& node, const std::string& path) {
    if (!node.is_array()) {
        fail(path, "expected an array of constraints");
    }
    std::vector<HalfSpace> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string item = path + "[" + std::to_string(i) + "]";
        if (!node[i].is_object()) {
            fail(item, "expected an object with normal and offset");
        }
        out.emplace_back(vector(field(node[i], "normal", item), item + ".normal"),
                         number(field(node[i], "offset", item), item + ".offset"));
    }
    return out;
}

std::optional<Eigen::Index> optional_dim(const json& node, const std::string& path) {
    const auto it = node.find("dim");
    if (it == node.end()) {
        return std::nullopt;
    }
    if (!it->is_number_integer() || it->get<long long>() < 1) {
        fail(path + ".dim", "expected a positive integer");
    }
    return static_cast<Eigen::Index>(it->get<long long>());
}

Eigen::Index infer_dim(const std::optional<Eigen::Index>& given, const std::vector<Vector>& vectors,
                       const std::string& path) {
    if (given) {
        return *given;
    }
    if (vectors.empty()) {
        fail(path, "cannot infer the dimension of an empty list; add a \"dim\" field");
    }
    return vectors.front().size();
}

ConcreteSet leaf(const json& node, const std::string& kind, const std::string& path) {
    auto get_vector = [&](const char* name) { return vector(field(node, name, path), path + "." + name); };
    auto get_number = [&](const char* name) { return number(field(node, name, path), path + "." + name); };

    if (kind == "HalfSpace") {
        return HalfSpace(get_vector("normal"), get_number("offset"));
    }
    if (kind == "Hyperplane") {
        return Hyperplane(get_vector("normal"), get_number("offset"));
    }
    if (kind == "Hyperrectangle") {
        return Hyperrectangle(get_vector("center"), get_vector("radius"));
    }
    if (kind == "BallInf") {
        return BallInf(get_vector("center"), get_number("radius"));
    }
    if (kind == "Interval") {
        return Interval(get_number("lo"), get_number("hi"));
    }
    if (kind == "Zonotope") {
        Vector center = get_vector("center");
        Matrix generators = matrix(field(node, "generators", path), path + ".generators", center.size());
        return Zonotope(std::move(center), std::move(generators));
    }
    if (kind == "HPolyhedron" || kind == "HPolytope") {
        std::vector<HalfSpace> constraints = halfspaces(field(node, "constraints", path), path + ".constraints");
        std::vector<Vector> normals;
        for (const auto& h : constraints) {
            normals.push_back(h.normal());
        }
        const Eigen::Index n = infer_dim(optional_dim(node, path), normals, path);
        if (kind == "HPolyhedron") {
            return HPolyhedron(std::move(constraints), n);
        }
        return HPolytope(std::move(constraints), n);
    }
    if (kind == "VPolygon") {
        return VPolygon(points(field(node, "vertices", path), path + ".vertices"));
    }
    if (kind == "VPolytope") {
        const std::vector<Vector> vertices = points(field(node, "vertices", path), path + ".vertices");
        return VPolytope(vertices, infer_dim(optional_dim(node, path), vertices, path));
    }
    fail(path, "unknown set kind \"" + kind + "\"");
}

std::string describe(const SetExpr& e) {
    const std::string kind =
        e.is_concrete() ? std::string(kind_name(e.concrete())) : std::string(kind_name(e.node().kind()));
    return kind + ", dimension " + std::to_string(e.dim());
}

SetExpr parse_node(const json& node, const std::string& path) {
    if (!node.is_object()) {
        fail(path, "expected an object with a \"set\" or \"op\" field");
    }
    const bool has_set = node.contains("set");
    const bool has_op = node.contains("op");
    if (has_set == has_op) {
        fail(path, "expected exactly one of \"set\" and \"op\"");
    }
    if (has_set) {
        const json& kind = node["set"];
        if (!kind.is_string()) {
            fail(path + ".set", "expected a string");
        }
        return leaf(node, kind.get<std::string>(), path);
    }

    const json& op = node["op"];
    if (!op.is_string()) {
        fail(path + ".op", "expected a string");
    }
    const std::string name = op.get<std::string>();
    const std::optional<LazyKind> kind = lazy_kind_from_name(name);
    if (!kind) {
        fail(path, "unknown operation \"" + name + "\"");
    }
    const json& args = field(node, "args", path);
    if (!args.is_array()) {
        fail(path + ".args", "expected an array");
    }
    std::vector<SetExpr> operands;
    for (std::size_t i = 0; i < args.size(); ++i) {
        operands.push_back(parse_node(args[i], path + ".args[" + std::to_string(i) + "]"));
    }

    const bool same_dims = *kind != LazyKind::CartesianProduct && *kind != LazyKind::LinearMap &&
                           *kind != LazyKind::AffineMap;
    if (same_dims) {
        for (std::size_t i = 1; i < operands.size(); ++i) {
            if (operands[i].dim() != operands[0].dim()) {
                throw DimensionMismatch(path + ": " + name + " operands args[0] (" + describe(operands[0]) +
                                        ") and args[" + std::to_string(i) + "] (" + describe(operands[i]) +
                                        ") have different dimensions");
            }
        }
    }

    NodePayload payload;
    if (const auto it = node.find("matrix"); it != node.end()) {
        payload.matrix = matrix(*it, path + ".matrix");
    }
    if (const auto it = node.find("vector"); it != node.end()) {
        payload.vector = vector(*it, path + ".vector");
    }
    try {
        return make_node(*kind, std::move(operands), std::move(payload));
    } catch (const DimensionMismatch& e) {
        throw DimensionMismatch(path + ": " + e.what());
    } catch (const InvalidArgument& e) {
        fail(path, e.what());
    }
}

std::vector<std::vector<double>> rows_of(const Matrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rows[static_cast<std::size_t>(i)].push_back(m(i, j));
        }
    }
    return rows;
}

json array_of(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json points_json(const std::vector<Vector>& pts) {
    json out = json::array();
    for (const auto& p : pts) {
        out.push_back(array_of(p));
    }
    return out;
}

json constraints_json(const std::vector<HalfSpace>& constraints) {
    json out = json::array();
    for (const auto& h : constraints) {
        out.push_back({{"normal", array_of(h.normal())}, {"offset", h.offset()}});
    }
    return out;
}

}  // namespace

SetExpr parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DocumentError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (root.is_object()) {
        if (const auto it = root.find("version"); it != root.end()) {
            if (!it->is_string() || it->get<std::string>() != kDocumentVersion) {
                fail("document.version", "unsupported version, expected \"" + std::string(kDocumentVersion) + "\"");
            }
        }
    }
    return expression_from_json(root);
}

SetExpr expression_from_json(const json& node) { return parse_node(node, "$"); }

Vector point_from_json(const json& node) {
    if (node.is_object()) {
        return vector(field(node, "point", "$"), "$.point");
    }
    return vector(node, "$");
}

json to_json(const ConcreteSet& set) {
    json out;
    out["set"] = std::string(kind_name(set));
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HalfSpace> || std::is_same_v<T, Hyperplane>) {
                out["normal"] = array_of(x.normal());
                out["offset"] = x.offset();
            } else if constexpr (std::is_same_v<T, Hyperrectangle>) {
                out["center"] = array_of(x.center());
                out["radius"] = array_of(x.radius());
            } else if constexpr (std::is_same_v<T, BallInf>) {
                out["center"] = array_of(x.center());
                out["radius"] = x.radius();
            } else if constexpr (std::is_same_v<T, Interval>) {
                out["lo"] = x.lo();
                out["hi"] = x.hi();
            } else if constexpr (std::is_same_v<T, Zonotope>) {
                out["center"] = array_of(x.center());
                out["generators"] = rows_of(x.generators());
            } else if constexpr (std::is_same_v<T, HPolyhedron> || std::is_same_v<T, HPolytope>) {
                out["constraints"] = constraints_json(x.constraints());
                out["dim"] = x.dim();
            } else if constexpr (std::is_same_v<T, VPolygon>) {
                out["vertices"] = points_json(x.vertices());
            } else {
                out["vertices"] = points_json(x.vertices());
                out["dim"] = x.dim();
            }
        },
        set);
    return out;
}

json to_json(const SetExpr& expr) {
    if (expr.is_concrete()) {
        return to_json(expr.concrete());
    }
    const LazyNode& node = expr.node();
    json out;
    out["op"] = std::string(kind_name(node.kind()));
    json args = json::array();
    for (const auto& op : node.operands()) {
        args.push_back(to_json(op));
    }
    out["args"] = std::move(args);
    if (node.matrix()) {
        out["matrix"] = rows_of(*node.matrix());
    }
    if (node.vector()) {
        out["vector"] = array_of(*node.vector());
    }
    return out;
}

std::string serialize(const SetExpr& expr, int indent) {
    json out = to_json(expr);
    out["version"] = std::string(kDocumentVersion);
    return out.dump(indent);
}

}  // namespace setcalc::io

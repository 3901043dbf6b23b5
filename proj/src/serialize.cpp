#include "hadwiger/serialize.hpp"

#include "hadwiger/error.hpp"

#include <string>

namespace hadwiger {

Json to_json(const MinorCertificate& cert)
{
    Json parts = Json::array();
    for (VertexSet part : cert.parts)
        parts.push_back(part.to_vector());
    return Json{{"parts", std::move(parts)}};
}

MinorCertificate minor_certificate_from_json(const Json& j)
{
    MinorCertificate cert;
    for (const auto& part : j.at("parts")) {
        VertexSet s;
        for (int v : part.get<std::vector<int>>()) {
            if (v < 0 || v >= kMaxVertices)
                throw Error(Errc::out_of_range, "vertex id " + std::to_string(v) + " in certificate");
            s.insert(v);
        }
        cert.parts.push_back(s);
    }
    return cert;
}

Json to_json(const SubdivisionCertificate& cert)
{
    Json paths = Json::object();
    for (const auto& [key, path] : cert.paths)
        paths[std::to_string(key.first) + "-" + std::to_string(key.second)] = path;
    return Json{{"branch", cert.branch_vertices}, {"paths", std::move(paths)}};
}

SubdivisionCertificate subdivision_certificate_from_json(const Json& j)
{
    SubdivisionCertificate cert;
    cert.branch_vertices = j.at("branch").get<std::vector<int>>();
    for (const auto& [key, path] : j.at("paths").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos)
            throw Error(Errc::bad_parameter, "path key '" + key + "' is not of the form u-v");
        const int u = std::stoi(key.substr(0, dash));
        const int v = std::stoi(key.substr(dash + 1));
        cert.paths[{u, v}] = path.get<std::vector<int>>();
    }
    return cert;
}

Json to_json(const Coloring& coloring) { return Json{{"colors", coloring.colors}}; }

Coloring coloring_from_json(const Json& j) { return {j.at("colors").get<std::vector<int>>()}; }

} // namespace hadwiger

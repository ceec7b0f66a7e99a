#include "acluster/json_io.hpp"

namespace acluster {

Json trop_to_json(const TropElement& m) { return Json(m.exps()); }

TropElement trop_from_json(const Json& j) {
    return TropElement(j.get<std::vector<int64_t>>());
}

Json ycoeff_to_json(const YCoeff& c) {
    Json arr = Json::array();
    for (const auto& [m, k] : c.terms()) {
        Json rec;
        rec["y"] = trop_to_json(m);
        rec["c"] = k;
        arr.push_back(std::move(rec));
    }
    return arr;
}

YCoeff ycoeff_from_json(const Json& j) {
    YCoeff c;
    for (const auto& rec : j) c.add_term(trop_from_json(rec.at("y")), rec.at("c").get<int64_t>());
    return c;
}

Json laurent_to_json(const ClusterLaurent& v) {
    Json arr = Json::array();
    for (const auto& [x, c] : v.terms()) {
        for (const auto& [m, k] : c.terms()) {
            Json rec;
            rec["x"] = Json(std::vector<int64_t>(x.begin(), x.end()));
            rec["y"] = trop_to_json(m);
            rec["c"] = k;
            arr.push_back(std::move(rec));
        }
    }
    return arr;
}

ClusterLaurent laurent_from_json(const Json& j, Cluster ref) {
    ClusterLaurent v(ref);
    for (const auto& rec : j) {
        auto xe = rec.at("x").get<std::vector<int64_t>>();
        if (xe.size() != 3) throw std::invalid_argument("x exponent triple expected");
        Vec3 x{xe[0], xe[1], xe[2]};
        v.add_term(x, YCoeff(rec.at("c").get<int64_t>(), trop_from_json(rec.at("y"))));
    }
    return v;
}

}  // namespace acluster

#include "hob/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "hob/error.hpp"

namespace hob {

namespace {

using nlohmann::json;

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_vec(std::ostringstream& os, const Vec3& v) {
  os << '[' << num17(v.x) << ',' << num17(v.y) << ',' << num17(v.t) << ']';
}

Vec3 read_vec(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::Parse, "expected a [x, y, t] triple");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json real_or_null(Real v) { return std::isnan(v) ? json(nullptr) : json(static_cast<double>(v)); }

std::string csv_real(Real v) {
  if (std::isnan(v)) return "";
  return num17(static_cast<double>(v));
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error(Errc::InvalidArgument, "unknown format '" + s + "' (json, csv, text)");
}

std::string atlas_to_json(const Atlas& atlas) {
  std::ostringstream os;
  os << "{\"m\":" << atlas.m() << ",\"n\":" << atlas.n() << ",\"max_rank\":" << atlas.max_rank() << ",\"tiles\":[";
  bool first = true;
  for (const Tile& t : atlas.tiles()) {
    if (!first) os << ',';
    first = false;
    os << "\n{\"id\":" << t.id << ",\"shape\":\"" << shape_name(t.shape) << "\",\"rank\":" << t.rank
       << ",\"type\":\"" << type_label_name(t.type) << "\",\"center\":";
    write_vec(os, t.center.vec());
    os << ",\"vertices\":[";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      if (i) os << ',';
      write_vec(os, t.vertices[i].vec());
    }
    os << "],\"neighbors\":[";
    const auto& nb = atlas.neighbors(t.id);
    for (std::size_t i = 0; i < nb.size(); ++i) os << (i ? "," : "") << nb[i];
    os << "]}";
  }
  os << "\n]}\n";
  return os.str();
}

Atlas atlas_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("atlas JSON: ") + e.what());
  }
  try {
    const int m = doc.at("m").get<int>();
    const int n = doc.at("n").get<int>();
    const int max_rank = doc.at("max_rank").get<int>();
    std::vector<Tile> tiles;
    std::vector<std::vector<int>> adjacency;
    for (const json& jt : doc.at("tiles")) {
      Tile t;
      t.id = jt.at("id").get<int>();
      t.shape = parse_shape(jt.at("shape").get<std::string>());
      t.center = HPoint::project(read_vec(jt.at("center")));
      for (const json& v : jt.at("vertices")) t.vertices.push_back(HPoint::project(read_vec(v)));
      tiles.push_back(std::move(t));
      adjacency.push_back(jt.at("neighbors").get<std::vector<int>>());
    }
    return atlas_from_parts(m, n, max_rank, std::move(tiles), std::move(adjacency));
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("atlas JSON: ") + e.what());
  }
}

std::string counts_report(const Atlas& atlas, Format format) {
  const auto counts = atlas.layer_counts();
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j{{"m", atlas.m()}, {"n", atlas.n()}, {"max_rank", atlas.max_rank()}, {"layers", json::array()}};
      for (const LayerCount& c : counts) {
        j["layers"].push_back({{"layer", c.layer.k},
                               {"shape", shape_name(c.layer.shape)},
                               {"rank", Atlas::overall_rank(c.layer.k, c.layer.shape)},
                               {"count", c.count},
                               {"types", {{"zero", c.types.zero}, {"X", c.types.x}, {"Y", c.types.y}, {"Z", c.types.z}}}});
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "layer,shape,rank,count,zero,X,Y,Z\n";
      for (const LayerCount& c : counts) {
        os << c.layer.k << ',' << shape_name(c.layer.shape) << ',' << Atlas::overall_rank(c.layer.k, c.layer.shape)
           << ',' << c.count << ',' << c.types.zero << ',' << c.types.x << ',' << c.types.y << ',' << c.types.z << "\n";
      }
      break;
    case Format::Text:
      os << "(" << atlas.m() << "," << atlas.n() << ") tiling to rank " << atlas.max_rank() << "\n";
      for (const LayerCount& c : counts) {
        os << "  " << shape_name(c.layer.shape) << "-gon layer " << c.layer.k << " (rank "
           << Atlas::overall_rank(c.layer.k, c.layer.shape) << "): " << c.count;
        if (c.layer.shape == Shape::NGon) {
          os << "  [zero " << c.types.zero << ", X " << c.types.x << ", Y " << c.types.y << ", Z " << c.types.z << "]";
        }
        os << "\n";
      }
      break;
  }
  return os.str();
}

std::vector<LayerPermutation> all_layer_permutations(const Atlas& atlas) {
  std::vector<LayerPermutation> out;
  for (int rank = 1; rank <= atlas.max_rank(); ++rank) {
    const LayerKey key = Atlas::layer_of_rank(rank);
    out.push_back(layer_permutation(atlas, key.k, key.shape));
  }
  return out;
}

std::string permutations_report(const Atlas& atlas, const std::vector<LayerPermutation>& perms, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j = json::array();
      for (const auto& p : perms) {
        j.push_back({{"m", atlas.m()},
                     {"n", atlas.n()},
                     {"layer", p.layer.k},
                     {"shape", shape_name(p.layer.shape)},
                     {"size", p.size},
                     {"jump", p.jump}});
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "m,n,layer,shape,size,jump\n";
      for (const auto& p : perms) {
        os << atlas.m() << ',' << atlas.n() << ',' << p.layer.k << ',' << shape_name(p.layer.shape) << ',' << p.size
           << ',' << p.jump << "\n";
      }
      break;
    case Format::Text:
      for (const auto& p : perms) {
        os << shape_name(p.layer.shape) << "-gon layer " << p.layer.k << ": i -> i + " << p.jump << " (mod " << p.size
           << ")" << (p.transitive() ? "" : "  [not transitive]") << "\n";
      }
      break;
  }
  return os.str();
}

std::string orbit_report(const OrbitResult& result, Format format) {
  const Vec3& p = result.start.vec();
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j{{"point", {p.x, p.y, p.t}},
             {"period", result.period ? json(*result.period) : json(nullptr)},
             {"iterations_used", result.iterations_used}};
      os << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "x,y,t,period,iterations_used\n"
         << num17(p.x) << ',' << num17(p.y) << ',' << num17(p.t) << ','
         << (result.period ? std::to_string(*result.period) : "") << ',' << result.iterations_used << "\n";
      break;
    case Format::Text:
      os << "point (" << num17(p.x) << ", " << num17(p.y) << ", " << num17(p.t) << "): ";
      if (result.period) {
        os << "period " << *result.period << "\n";
      } else {
        os << "no return within " << result.iterations_used << " iterations\n";
      }
      break;
  }
  return os.str();
}

std::string closed_forms_report(const std::vector<ClosedFormValues>& rows, double rho, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j = json::array();
      for (const auto& v : rows) {
        j.push_back({{"family", family_name(v.family)},
                     {"m", v.m},
                     {"n", v.n},
                     {"k", v.k},
                     {"q", real_or_null(v.q)},
                     {"l", real_or_null(v.l)},
                     {"s", real_or_null(v.s)},
                     {"p", real_or_null(v.p)},
                     {"j", real_or_null(v.j)},
                     {"q_printed", real_or_null(v.q_printed)},
                     {"p_printed", real_or_null(v.p_printed)},
                     {"rho", rho}});
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "family,m,n,k,q,l,s,p,j,q_printed,p_printed,rho\n";
      for (const auto& v : rows) {
        os << family_name(v.family) << ',' << v.m << ',' << v.n << ',' << v.k << ',' << csv_real(v.q) << ','
           << csv_real(v.l) << ',' << csv_real(v.s) << ',' << csv_real(v.p) << ',' << csv_real(v.j) << ','
           << csv_real(v.q_printed) << ',' << csv_real(v.p_printed) << ',' << num17(rho) << "\n";
      }
      break;
    case Format::Text:
      for (const auto& v : rows) {
        os << family_name(v.family) << " (" << v.m << "," << v.n << ") k=" << v.k << ": q=" << static_cast<double>(v.q)
           << " p=" << static_cast<double>(v.p);
        if (v.has_mgons) os << " l=" << static_cast<double>(v.l) << " j=" << static_cast<double>(v.j);
        os << " s=" << static_cast<double>(v.s) << "\n";
      }
      os << "rho=" << num17(rho) << "\n";
      break;
  }
  return os.str();
}

std::string rotation_report(const RotationSummary& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j{{"m", r.m},           {"n", r.n},           {"theta0", r.theta0}, {"iters", r.iters},
             {"numeric", r.numeric}, {"closed", r.closed}, {"difference", std::abs(r.numeric - r.closed)}};
      os << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "m,n,theta0,iters,numeric,closed,difference\n"
         << r.m << ',' << r.n << ',' << num17(r.theta0) << ',' << r.iters << ',' << num17(r.numeric) << ','
         << num17(r.closed) << ',' << num17(std::abs(r.numeric - r.closed)) << "\n";
      break;
    case Format::Text:
      os << "(" << r.m << "," << r.n << ") rotation number: closed " << num17(r.closed) << ", numeric "
         << num17(r.numeric) << " (" << r.iters << " iterates, difference " << std::abs(r.numeric - r.closed)
         << ")\n";
      break;
  }
  return os.str();
}

}  // namespace hob

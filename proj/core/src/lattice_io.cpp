#include <string>

#include "colorloss/lattice.hpp"
#include "json.hpp"

namespace colorloss {

using nlohmann::json;

std::string lattice_to_json(const ColorCodeLattice& lattice, int indent) {
  json doc;
  doc["schema"] = "colorloss.lattice";
  doc["schema_version"] = kLatticeSchemaVersion;
  doc["geometry"] = std::string(to_string(lattice.geometry()));
  doc["L"] = lattice.size();

  json qubits = json::array();
  for (QubitId q = 0; q < lattice.num_qubits(); ++q) {
    const auto pos = lattice.position(q);
    const auto cell = lattice.cell_of(q);
    json edges = json::array();
    for (Color c : kColors) {
      const EdgeId e = lattice.edge_at(q, c);
      edges.push_back(e == kNone ? json(nullptr) : json(e));
    }
    qubits.push_back({{"id", q},
                      {"alive", lattice.alive(q)},
                      {"position", {pos[0], pos[1]}},
                      {"cell", {cell.dx, cell.dy}},
                      {"edges", edges}});
  }
  doc["qubits"] = std::move(qubits);

  json edges = json::array();
  for (const Edge& e : lattice.edges()) {
    edges.push_back({{"id", e.id},
                     {"ends", {e.ends[0], e.ends[1]}},
                     {"color", std::string(to_string(e.color))},
                     {"original", e.original},
                     {"alive", e.alive},
                     {"shift", {e.shift.dx, e.shift.dy}}});
  }
  doc["edges"] = std::move(edges);

  json faces = json::array();
  for (const Face& f : lattice.faces()) {
    faces.push_back({{"id", f.id}, {"color", std::string(to_string(f.color))}, {"qubits", f.qubits}});
  }
  doc["faces"] = std::move(faces);
  return doc.dump(indent);
}

ColorCodeLattice lattice_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.value("schema", "") != "colorloss.lattice") {
      throw std::invalid_argument("not a colorloss lattice document");
    }
    if (doc.at("schema_version").get<int>() != kLatticeSchemaVersion) {
      throw std::invalid_argument("unsupported lattice schema_version");
    }
    const Geometry geometry = parse_geometry(doc.at("geometry").get<std::string>());
    const int L = doc.at("L").get<int>();

    std::vector<Edge> edges;
    for (const json& je : doc.at("edges")) {
      Edge e;
      e.id = je.at("id").get<EdgeId>();
      if (e.id != edges.size()) throw std::invalid_argument("edge ids must be 0..E-1 in order");
      e.ends = {je.at("ends").at(0).get<QubitId>(), je.at("ends").at(1).get<QubitId>()};
      e.color = parse_color(je.at("color").get<std::string>());
      e.original = je.at("original").get<bool>();
      e.alive = je.at("alive").get<bool>();
      e.shift = {je.at("shift").at(0).get<int>(), je.at("shift").at(1).get<int>()};
      edges.push_back(e);
    }

    std::vector<std::uint8_t> alive;
    std::vector<std::array<EdgeId, 3>> incident;
    for (const json& jq : doc.at("qubits")) {
      if (jq.at("id").get<QubitId>() != alive.size()) {
        throw std::invalid_argument("qubit ids must be 0..N-1 in order");
      }
      alive.push_back(jq.at("alive").get<bool>() ? 1 : 0);
      std::array<EdgeId, 3> slots{kNone, kNone, kNone};
      const json& je = jq.at("edges");
      for (std::size_t c = 0; c < 3; ++c) {
        if (!je.at(c).is_null()) slots[c] = je.at(c).get<EdgeId>();
      }
      incident.push_back(slots);
    }
    return ColorCodeLattice::from_parts(geometry, L, std::move(alive), std::move(edges),
                                        std::move(incident));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice JSON: ") + e.what());
  }
}

}  // namespace colorloss

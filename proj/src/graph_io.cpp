#include "scimap/graph_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "scimap/io.hpp"

namespace scimap {

namespace {

namespace pt = boost::property_tree;

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        case '\t': out += "&#9;"; break;
        case '\n': out += "&#10;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::map<Node, std::size_t> node_ids(const MultiNet& net) {
    std::map<Node, std::size_t> ids;
    for (const auto& n : net.nodes)
        ids.emplace(n, ids.size());
    return ids;
}

const std::size_t* community_of(const ModulePartition* partition, const Node& node) {
    if (partition == nullptr)
        return nullptr;
    auto it = partition->community.find(node);
    return it == partition->community.end() ? nullptr : &it->second;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view text) {
    if (text == "graphml")
        return GraphFormat::GraphML;
    if (text == "dot")
        return GraphFormat::Dot;
    if (text == "csv")
        return GraphFormat::EdgeCsv;
    throw std::invalid_argument("unknown graph format '" + std::string(text) + "'");
}

void write_graphml(std::ostream& out, const MultiNet& net, const ModulePartition* partition) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
           "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
           "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    if (partition != nullptr)
        out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" "
               "attr.type=\"long\"/>\n";
    out << "  <key id=\"layer\" for=\"edge\" attr.name=\"layer\" attr.type=\"string\"/>\n"
           "  <key id=\"raw_weight\" for=\"edge\" attr.name=\"raw_weight\" "
           "attr.type=\"double\"/>\n"
           "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
           "  <graph id=\"multinet\" edgedefault=\"directed\">\n";
    auto ids = node_ids(net);
    for (const auto& [node, id] : ids) {
        out << "    <node id=\"n" << id << "\"><data key=\"kind\">" << to_string(node.kind)
            << "</data><data key=\"label\">" << xml_escape(node.label) << "</data>";
        if (const auto* c = community_of(partition, node))
            out << "<data key=\"community\">" << *c << "</data>";
        out << "</node>\n";
    }
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const auto& e = net.edges[i];
        out << "    <edge id=\"e" << i << "\" source=\"n" << ids.at(e.source) << "\" target=\"n"
            << ids.at(e.target) << "\" directed=\"" << (e.directed ? "true" : "false")
            << "\"><data key=\"layer\">" << to_string(e.layer)
            << "</data><data key=\"raw_weight\">" << io::format_double(e.raw_weight)
            << "</data><data key=\"weight\">" << io::format_double(e.weight)
            << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const MultiNet& net, const ModulePartition* partition) {
    out << "digraph multinet {\n";
    auto ids = node_ids(net);
    for (const auto& [node, id] : ids) {
        out << "  n" << id << " [kind=" << dot_quote(to_string(node.kind))
            << ", label=" << dot_quote(node.label);
        if (const auto* c = community_of(partition, node))
            out << ", community=" << *c;
        out << "];\n";
    }
    for (const auto& e : net.edges) {
        out << "  n" << ids.at(e.source) << " -> n" << ids.at(e.target)
            << " [layer=" << dot_quote(to_string(e.layer))
            << ", raw_weight=" << io::format_double(e.raw_weight)
            << ", weight=" << io::format_double(e.weight);
        if (!e.directed)
            out << ", dir=none";
        out << "];\n";
    }
    out << "}\n";
}

void write_edge_csv(std::ostream& out, const MultiNet& net) {
    out << "source_kind,source_label,target_kind,target_label,layer,directed,raw_weight,weight\n";
    for (const auto& e : net.edges)
        out << to_string(e.source.kind) << ',' << io::csv_field(e.source.label) << ','
            << to_string(e.target.kind) << ',' << io::csv_field(e.target.label) << ','
            << to_string(e.layer) << ',' << (e.directed ? "true" : "false") << ','
            << io::format_double(e.raw_weight) << ',' << io::format_double(e.weight) << '\n';
}

GraphFile read_graphml(std::istream& in) {
    pt::ptree tree;
    try {
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw std::runtime_error(std::string("malformed GraphML: ") + e.what());
    }
    const auto& graph = tree.get_child("graphml.graph");

    auto data_of = [](const pt::ptree& element) {
        std::map<std::string, std::string> data;
        for (const auto& [tag, child] : element)
            if (tag == "data")
                data[child.get<std::string>("<xmlattr>.key")] = child.data();
        return data;
    };

    GraphFile file;
    std::map<std::string, Node> by_id;
    ModulePartition partition;
    bool all_have_community = true;
    for (const auto& [tag, element] : graph) {
        if (tag != "node")
            continue;
        auto data = data_of(element);
        Node node{parse_node_kind(data.at("kind")), data.at("label")};
        by_id.emplace(element.get<std::string>("<xmlattr>.id"), node);
        file.net.nodes.insert(node);
        if (auto c = data.find("community"); c != data.end())
            partition.community.emplace(node, static_cast<std::size_t>(io::parse_integer(c->second)));
        else
            all_have_community = false;
    }
    for (const auto& [tag, element] : graph) {
        if (tag != "edge")
            continue;
        auto data = data_of(element);
        Edge e;
        e.source = by_id.at(element.get<std::string>("<xmlattr>.source"));
        e.target = by_id.at(element.get<std::string>("<xmlattr>.target"));
        e.layer = parse_layer_tag(data.at("layer"));
        e.raw_weight = io::parse_double(data.at("raw_weight"));
        e.weight = io::parse_double(data.at("weight"));
        e.directed = element.get<std::string>("<xmlattr>.directed", "true") == "true";
        file.net.edges.push_back(std::move(e));
    }
    if (all_have_community && !partition.community.empty()) {
        std::set<std::size_t> ids;
        for (const auto& [node, c] : partition.community)
            ids.insert(c);
        partition.n_communities = ids.size();
        file.partition = std::move(partition);
    }
    return file;
}

GraphFile read_graphml(const std::filesystem::path& path) {
    auto in = io::open_input(path);
    try {
        return read_graphml(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void export_graph(const MultiNet& net, GraphFormat format, const std::filesystem::path& path,
                  const ModulePartition* partition) {
    auto out = io::open_output(path);
    switch (format) {
    case GraphFormat::GraphML:
        write_graphml(out, net, partition);
        break;
    case GraphFormat::Dot:
        write_dot(out, net, partition);
        break;
    case GraphFormat::EdgeCsv:
        write_edge_csv(out, net);
        break;
    }
    out.flush();
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

void write_partition_csv(std::ostream& out, const ModulePartition& partition) {
    out << "kind,label,community\n";
    for (const auto& [node, c] : partition.community)
        out << to_string(node.kind) << ',' << io::csv_field(node.label) << ',' << c << '\n';
    out << "# Q=" << io::format_double(partition.q) << '\n';
}

ModulePartition read_partition_csv(std::istream& in) {
    ModulePartition partition;
    std::string line;
    if (!std::getline(in, line) || line.rfind("kind,label,community", 0) != 0)
        throw std::runtime_error("partition file lacks the kind,label,community header");
    std::set<std::size_t> ids;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# Q=", 0) == 0) {
            partition.q = io::parse_double(line.substr(4));
            continue;
        }
        auto fields = io::parse_csv_line(line);
        if (fields.size() != 3)
            throw std::runtime_error("partition row needs 3 fields: " + line);
        auto c = static_cast<std::size_t>(io::parse_integer(fields[2]));
        partition.community.emplace(Node{parse_node_kind(fields[0]), fields[1]}, c);
        ids.insert(c);
    }
    partition.n_communities = ids.size();
    return partition;
}

ModulePartition read_partition_csv(const std::filesystem::path& path) {
    auto in = io::open_input(path);
    return read_partition_csv(in);
}

}  // namespace scimap

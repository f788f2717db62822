#include "config.hpp"

#include <map>

namespace vqc::cli {

const char* method_name(Method m) {
    switch (m) {
        case Method::lattice: return "lattice";
        case Method::spectral: return "spectral";
        case Method::recursion: return "recursion";
        case Method::all: return "all";
    }
    return "?";
}

Method parse_method(const std::string& text) {
    static const std::map<std::string, Method> names{
        {"lattice", Method::lattice}, {"spectral", Method::spectral}, {"recursion", Method::recursion}, {"all", Method::all}};
    auto it = names.find(text);
    if (it == names.end()) throw UsageError("unknown method '" + text + "'");
    return it->second;
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "pretty") return Format::pretty;
    throw UsageError("unknown format '" + text + "'");
}

}  // namespace vqc::cli

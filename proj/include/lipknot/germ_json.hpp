#pragma once
// JSON persistence for germs. Serialization is canonical: fixed key order and
// 2-space indentation, so equal germs produce byte-identical files.
#include <string>

#include "lipknot/germ.hpp"

namespace lipknot {

std::string germ_to_json(const Germ& g);
Germ germ_from_json(const std::string& text);

Germ load_germ_file(const std::string& path);
void save_germ_file(const Germ& g, const std::string& path);

}  // namespace lipknot

// Copyright 2026 The Framekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON image of a corpus, schema version 1:
//
//   { "version": 1,
//     "frames": [ {
//       "name": str, "overlays": [str, ...], "annotation"?: str,
//       "attributes": [ { "name": str, "kind": "exclusive"|"multi",
//                         "values": [ { "name": str,
//                                       "membership": [str, ...],
//                                       "expands"?: str, "refers"?: str,
//                                       "annotation"?: str } ] } ],
//       "constraints": [ { "scope": str,
//                          "antecedent": {"attribute": str, "value": str},
//                          "consequent": {"attribute": str, "value": str} } ],
//       "links": [ { "from": str, "to": str, "label"?: str } ] } ] }
//
// Import is strict: unknown keys anywhere are rejected, so typos never pass
// silently. Forward compatibility rides on "version" alone.

#include <string>

#include "framekit/dsl.hpp"
#include "json_util.hpp"

namespace framekit {

namespace {

using jsonu::json;

json value_to_json(const Value& v) {
  json j;
  j["name"] = v.name;
  j["membership"] = v.membership;
  if (v.expands) j["expands"] = *v.expands;
  if (v.refers) j["refers"] = *v.refers;
  if (v.annotation) j["annotation"] = *v.annotation;
  return j;
}

json frame_to_json(const Frame& f) {
  json j;
  j["name"] = f.name;
  j["overlays"] = f.overlays;
  if (f.annotation) j["annotation"] = *f.annotation;
  j["attributes"] = json::array();
  for (const Attribute& attr : f.attributes) {
    json ja;
    ja["name"] = attr.name;
    ja["kind"] = attr.kind == AttributeKind::Exclusive ? "exclusive" : "multi";
    ja["values"] = json::array();
    for (const Value& v : attr.values) ja["values"].push_back(value_to_json(v));
    j["attributes"].push_back(std::move(ja));
  }
  j["constraints"] = json::array();
  for (const Constraint& c : f.constraints) {
    json jc;
    jc["scope"] = c.scope;
    jc["antecedent"] = {{"attribute", c.antecedent.attribute},
                        {"value", c.antecedent.value}};
    jc["consequent"] = {{"attribute", c.consequent.attribute},
                        {"value", c.consequent.value}};
    j["constraints"].push_back(std::move(jc));
  }
  j["links"] = json::array();
  for (const AttributeLink& l : f.links) {
    json jl;
    jl["from"] = l.from;
    jl["to"] = l.to;
    if (l.label) jl["label"] = *l.label;
    j["links"].push_back(std::move(jl));
  }
  return j;
}

Value value_from_json(const json& j, const std::string& path) {
  jsonu::check_object(j, path);
  jsonu::check_known(j, {"name", "membership", "expands", "refers",
                         "annotation"},
                     path);
  Value v;
  v.name = jsonu::get_string(jsonu::get_field(j, "name", path),
                             path + "/name");
  v.membership = jsonu::get_strings(jsonu::get_field(j, "membership", path),
                                    path + "/membership");
  v.expands = jsonu::opt_string(j, "expands", path);
  v.refers = jsonu::opt_string(j, "refers", path);
  v.annotation = jsonu::opt_string(j, "annotation", path);
  return v;
}

ValueRef valref_from_json(const json& j, const std::string& path) {
  jsonu::check_object(j, path);
  jsonu::check_known(j, {"attribute", "value"}, path);
  ValueRef ref;
  ref.attribute = jsonu::get_string(jsonu::get_field(j, "attribute", path),
                                    path + "/attribute");
  ref.value = jsonu::get_string(jsonu::get_field(j, "value", path),
                                path + "/value");
  return ref;
}

Frame frame_from_json(const json& j, const std::string& path) {
  jsonu::check_object(j, path);
  jsonu::check_known(j,
                     {"name", "overlays", "annotation", "attributes",
                      "constraints", "links"},
                     path);
  Frame f;
  f.name = jsonu::get_string(jsonu::get_field(j, "name", path),
                             path + "/name");
  f.overlays = jsonu::get_strings(jsonu::get_field(j, "overlays", path),
                                  path + "/overlays");
  f.annotation = jsonu::opt_string(j, "annotation", path);

  if (j.contains("attributes")) {
    std::size_t i = 0;
    for (const json& ja :
         jsonu::get_array(j.at("attributes"), path + "/attributes")) {
      const std::string apath = path + "/attributes/" + std::to_string(i++);
      jsonu::check_object(ja, apath);
      jsonu::check_known(ja, {"name", "kind", "values"}, apath);
      Attribute attr;
      attr.name = jsonu::get_string(jsonu::get_field(ja, "name", apath),
                                    apath + "/name");
      if (ja.contains("kind")) {
        const std::string kind =
            jsonu::get_string(ja.at("kind"), apath + "/kind");
        if (kind == "exclusive")
          attr.kind = AttributeKind::Exclusive;
        else if (kind == "multi")
          attr.kind = AttributeKind::Multi;
        else
          throw Error("type-mismatch",
                      "expected \"exclusive\" or \"multi\" at " + apath +
                          "/kind");
      }
      std::size_t vi = 0;
      for (const json& jv : jsonu::get_array(
               jsonu::get_field(ja, "values", apath), apath + "/values"))
        attr.values.push_back(
            value_from_json(jv, apath + "/values/" + std::to_string(vi++)));
      f.attributes.push_back(std::move(attr));
    }
  }

  if (j.contains("constraints")) {
    std::size_t i = 0;
    for (const json& jc :
         jsonu::get_array(j.at("constraints"), path + "/constraints")) {
      const std::string cpath = path + "/constraints/" + std::to_string(i++);
      jsonu::check_object(jc, cpath);
      jsonu::check_known(jc, {"scope", "antecedent", "consequent"}, cpath);
      Constraint c;
      c.scope = jsonu::get_string(jsonu::get_field(jc, "scope", cpath),
                                  cpath + "/scope");
      c.antecedent = valref_from_json(
          jsonu::get_field(jc, "antecedent", cpath), cpath + "/antecedent");
      c.consequent = valref_from_json(
          jsonu::get_field(jc, "consequent", cpath), cpath + "/consequent");
      f.constraints.push_back(std::move(c));
    }
  }

  if (j.contains("links")) {
    std::size_t i = 0;
    for (const json& jl : jsonu::get_array(j.at("links"), path + "/links")) {
      const std::string lpath = path + "/links/" + std::to_string(i++);
      jsonu::check_object(jl, lpath);
      jsonu::check_known(jl, {"from", "to", "label"}, lpath);
      AttributeLink l;
      l.from = jsonu::get_string(jsonu::get_field(jl, "from", lpath),
                                 lpath + "/from");
      l.to = jsonu::get_string(jsonu::get_field(jl, "to", lpath),
                               lpath + "/to");
      l.label = jsonu::opt_string(jl, "label", lpath);
      f.links.push_back(std::move(l));
    }
  }
  return f;
}

}  // namespace

std::string export_json(const Corpus& corpus) {
  json root;
  root["version"] = 1;
  root["frames"] = json::array();
  for (const Frame& frame : corpus.frames)
    root["frames"].push_back(frame_to_json(frame));
  return root.dump(2) + "\n";
}

Corpus import_json(std::string_view text) {
  const json root = jsonu::parse_or_throw(text);
  jsonu::check_object(root, "/");
  jsonu::check_known(root, {"version", "frames"}, "/");
  const json& version = jsonu::get_field(root, "version", "/");
  if (!version.is_number_integer() || version.get<int>() != 1)
    throw Error("unsupported-version",
                "this reader understands schema version 1 only");
  Corpus corpus;
  std::size_t i = 0;
  for (const json& jf :
       jsonu::get_array(jsonu::get_field(root, "frames", "/"), "/frames"))
    corpus.frames.push_back(
        frame_from_json(jf, "/frames/" + std::to_string(i++)));
  return corpus;
}

}  // namespace framekit

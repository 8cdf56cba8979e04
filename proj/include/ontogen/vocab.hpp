#pragma once

#include <string_view>

// Well-known RDF / RDFS / OWL / XSD IRIs.
namespace ontogen::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr std::string_view kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kSubPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view kDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kRdfsLiteral = "http://www.w3.org/2000/01/rdf-schema#Literal";
inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view kObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view kFunctionalProperty = "http://www.w3.org/2002/07/owl#FunctionalProperty";
inline constexpr std::string_view kDisjointWith = "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";

// Predicates whose statements belong to the T-box rather than the A-box.
inline bool is_schema_predicate(std::string_view iri) {
  return iri == kType || iri == kSubClassOf || iri == kSubPropertyOf ||
         iri == kDomain || iri == kRange || iri == kDisjointWith;
}

// Classes that type other schema elements (a class declaration is an
// rdf:type statement whose object is one of these).
inline bool is_meta_class(std::string_view iri) {
  return iri == kOwlClass || iri == kRdfsClass || iri == kProperty ||
         iri == kObjectProperty || iri == kDatatypeProperty ||
         iri == kFunctionalProperty;
}

// Local name of an IRI: the part after the last '#', '/' or ':'.
inline std::string_view local_name(std::string_view iri) {
  auto pos = iri.find_last_of("#/:");
  if (pos == std::string_view::npos || pos + 1 == iri.size()) return iri;
  return iri.substr(pos + 1);
}

}  // namespace ontogen::vocab

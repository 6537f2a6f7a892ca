/*
 * Copyright 2026 The smartmash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SMART_VOCABULARY_HPP_
#define SMART_VOCABULARY_HPP_

#include <string>
#include <vector>

#include "smart/graph.hpp"
#include "smart/term.hpp"

/// Well-known terms. Service-description and domain terms share the
/// ontology namespace; meta properties come from RDF, RDFS and OWL.
namespace smart::vocab {

inline const std::string kNs = "http://smart.example/ont#";
inline const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kOwl = "http://www.w3.org/2002/07/owl#";
inline const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

inline Iri ont(const std::string& local) { return Iri(kNs + local); }

// Classes.
inline const Iri ServiceThing = ont("ServiceThing");
inline const Iri DomainThing = ont("DomainThing");
inline const Iri Service = ont("Service");
inline const Iri SISOService = ont("SISOService");
inline const Iri Parameter = ont("Parameter");
inline const Iri InputParameter = ont("InputParameter");
inline const Iri OutputParameter = ont("OutputParameter");
inline const Iri LogicalParameter = ont("LogicalParameter");
inline const Iri LogicalInputParameter = ont("LogicalInputParameter");
inline const Iri LogicalOutputParameter = ont("LogicalOutputParameter");
inline const Iri RootInputParameter = ont("RootInputParameter");
inline const Iri RootOutputParameter = ont("RootOutputParameter");
inline const Iri SubInputParameter = ont("SubInputParameter");
inline const Iri SubOutputParameter = ont("SubOutputParameter");
inline const Iri RestParameter = ont("RestParameter");
inline const Iri RestInputParameter = ont("RestInputParameter");
inline const Iri StaticRestInputParameter = ont("StaticRestInputParameter");
inline const Iri VariableRestInputParameter = ont("VariableRestInputParameter");
inline const Iri RestOutputParameter = ont("RestOutputParameter");
inline const Iri InputOutputRelation = ont("InputOutputRelation");
inline const Iri InputToOutputRelation = ont("InputToOutputRelation");
inline const Iri OutputToInputRelation = ont("OutputToInputRelation");
inline const Iri DomainClass = ont("DomainClass");
inline const Iri DomainProperty = ont("DomainProperty");
inline const Iri DomainObjectProperty = ont("DomainObjectProperty");
inline const Iri DomainDataProperty = ont("DomainDataProperty");

// Object properties.
inline const Iri topDomainObjectProperty = ont("topDomainObjectProperty");
inline const Iri topServiceObjectProperty = ont("topServiceObjectProperty");
inline const Iri fromDataProperty = ont("fromDataProperty");
inline const Iri fromObjectProperty = ont("fromObjectProperty");
inline const Iri hasIORelation = ont("hasIORelation");
inline const Iri hasRestInput = ont("hasRestInput");
inline const Iri hasRestOutput = ont("hasRestOutput");
inline const Iri hasRootParameter = ont("hasRootParameter");
inline const Iri hasRootInput = ont("hasRootInput");
inline const Iri hasRootOutput = ont("hasRootOutput");
inline const Iri subject = ont("subject");
inline const Iri predicate = ont("predicate");
inline const Iri object = ont("object");
inline const Iri restInputOf = ont("restInputOf");
inline const Iri restOutputOf = ont("restOutputOf");
inline const Iri rootParameterOf = ont("rootParameterOf");
inline const Iri rootInputOf = ont("rootInputOf");
inline const Iri rootOutputOf = ont("rootOutputOf");
inline const Iri subInputOf = ont("subInputOf");
inline const Iri subOutputOf = ont("subOutputOf");
inline const Iri subParameterOf = ont("subParameterOf");
inline const Iri toInput = ont("toInput");
inline const Iri toOutput = ont("toOutput");
inline const Iri fromLogicalInput = ont("fromLogicalInput");
inline const Iri fromLogicalOutput = ont("fromLogicalOutput");
inline const Iri toRestParameter = ont("toRestParameter");
/// The logical parameter's domain class; not rdf:type.
inline const Iri type = ont("type");

// Data properties.
inline const Iri topDomainDataProperty = ont("topDomainDataProperty");
inline const Iri topServiceDataProperty = ont("topServiceDataProperty");
inline const Iri endpoint = ont("endpoint");
inline const Iri mandatory = ont("mandatory");
inline const Iri parameterValue = ont("parameterValue");
inline const Iri parameterName = ont("parameterName");
inline const Iri resultXPath = ont("resultXPath");
inline const Iri rootOutputXPath = ont("rootOutputXPath");
inline const Iri restOutputXPath = ont("restOutputXPath");

// Annotation recorded for the "inverse functional" checkbox; never reasoned
// over.
inline const Iri InverseFunctionalProperty = Iri(kOwl + "InverseFunctionalProperty");

// Meta.
inline const Iri rdfType = Iri(kRdf + "type");
inline const Iri subClassOf = Iri(kRdfs + "subClassOf");
inline const Iri subPropertyOf = Iri(kRdfs + "subPropertyOf");
inline const Iri label = Iri(kRdfs + "label");
inline const Iri range = Iri(kRdfs + "range");
inline const Iri domain = Iri(kRdfs + "domain");
inline const Iri equivalentProperty = Iri(kOwl + "equivalentProperty");
inline const Iri inverseOf = Iri(kOwl + "inverseOf");
inline const Iri TransitiveProperty = Iri(kOwl + "TransitiveProperty");
inline const Iri owlClass = Iri(kOwl + "Class");
inline const Iri owlThing = Iri(kOwl + "Thing");
inline const Iri ObjectProperty = Iri(kOwl + "ObjectProperty");
inline const Iri DatatypeProperty = Iri(kOwl + "DatatypeProperty");

inline const Iri xsdString = Iri(kXsd + "string");
inline const Iri xsdDecimal = Iri(kXsd + "decimal");
inline const Iri xsdBoolean = Iri(kXsd + "boolean");

/// Every vocabulary IRI, for distinctness checks and serializer prefixes.
std::vector<Iri> allTerms();

/// The baked-in axioms: property hierarchy, inverses, transitivity markers
/// and the service-description class taxonomy. Loaded before any ontology.
Graph axioms();

}  // namespace smart::vocab

#endif  // SMART_VOCABULARY_HPP_

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

#include "smart/vocabulary.hpp"

namespace smart::vocab {

std::vector<Iri> allTerms() {
  return {
      ServiceThing, DomainThing, Service, SISOService, Parameter,
      InputParameter, OutputParameter, LogicalParameter, LogicalInputParameter,
      LogicalOutputParameter, RootInputParameter, RootOutputParameter,
      SubInputParameter, SubOutputParameter, RestParameter, RestInputParameter,
      StaticRestInputParameter, VariableRestInputParameter, RestOutputParameter,
      InputOutputRelation, InputToOutputRelation, OutputToInputRelation,
      DomainClass, DomainProperty, DomainObjectProperty, DomainDataProperty,
      topDomainObjectProperty, topServiceObjectProperty, fromDataProperty,
      fromObjectProperty, hasIORelation, hasRestInput, hasRestOutput,
      hasRootParameter, hasRootInput, hasRootOutput, subject, predicate, object,
      restInputOf, restOutputOf, rootParameterOf, rootInputOf, rootOutputOf,
      subInputOf, subOutputOf, subParameterOf, toInput, toOutput,
      fromLogicalInput, fromLogicalOutput, toRestParameter, type,
      topDomainDataProperty, topServiceDataProperty, endpoint, mandatory,
      parameterValue, parameterName, resultXPath, rootOutputXPath,
      restOutputXPath, rdfType, subClassOf, subPropertyOf, equivalentProperty,
      inverseOf, TransitiveProperty, label, range, domain,
  };
}

Graph axioms() {
  Graph g;
  auto add = [&g](const Iri& s, const Iri& p, const Iri& o) {
    g.insert({s, p, o});
  };

  add(fromLogicalInput, subPropertyOf, subInputOf);
  add(fromLogicalOutput, subPropertyOf, subOutputOf);
  add(subInputOf, subPropertyOf, subParameterOf);
  add(subOutputOf, subPropertyOf, subParameterOf);
  add(subInputOf, rdfType, TransitiveProperty);
  add(subOutputOf, rdfType, TransitiveProperty);
  add(restInputOf, inverseOf, hasRestInput);
  add(restOutputOf, inverseOf, hasRestOutput);
  add(rootInputOf, inverseOf, hasRootInput);
  add(rootOutputOf, inverseOf, hasRootOutput);
  add(rootParameterOf, inverseOf, hasRootParameter);
  add(toInput, inverseOf, fromLogicalInput);
  add(toOutput, inverseOf, fromLogicalOutput);
  add(toRestParameter, inverseOf, fromDataProperty);
  add(rootInputOf, subPropertyOf, rootParameterOf);
  add(rootOutputOf, subPropertyOf, rootParameterOf);

  add(Service, subClassOf, ServiceThing);
  add(SISOService, subClassOf, Service);
  add(Parameter, subClassOf, ServiceThing);
  add(InputOutputRelation, subClassOf, ServiceThing);
  add(InputParameter, subClassOf, Parameter);
  add(OutputParameter, subClassOf, Parameter);
  add(LogicalParameter, subClassOf, Parameter);
  add(RestParameter, subClassOf, Parameter);
  add(LogicalInputParameter, subClassOf, LogicalParameter);
  add(LogicalInputParameter, subClassOf, InputParameter);
  add(LogicalOutputParameter, subClassOf, LogicalParameter);
  add(LogicalOutputParameter, subClassOf, OutputParameter);
  add(RootInputParameter, subClassOf, LogicalInputParameter);
  add(SubInputParameter, subClassOf, LogicalInputParameter);
  add(RootOutputParameter, subClassOf, LogicalOutputParameter);
  add(SubOutputParameter, subClassOf, LogicalOutputParameter);
  add(RestInputParameter, subClassOf, RestParameter);
  add(RestInputParameter, subClassOf, InputParameter);
  add(StaticRestInputParameter, subClassOf, RestInputParameter);
  add(VariableRestInputParameter, subClassOf, RestInputParameter);
  add(RestOutputParameter, subClassOf, RestParameter);
  add(RestOutputParameter, subClassOf, OutputParameter);
  add(InputToOutputRelation, subClassOf, InputOutputRelation);
  add(OutputToInputRelation, subClassOf, InputOutputRelation);
  add(DomainObjectProperty, subClassOf, DomainProperty);
  add(DomainDataProperty, subClassOf, DomainProperty);
  return g;
}

}  // namespace smart::vocab

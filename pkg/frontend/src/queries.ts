/** Query text builders for the gateway's unified schema. */

function quote(value: string): string {
  return `"${value.replace(/\\/g, "\\\\").replace(/"/g, '\\"')}"`;
}

export function paperContextQuery(doi: string): string {
  return `{ paper(doi: ${quote(doi)}) {
    doi title abstract
    citations { title doi }
    references { title doi }
    project { funder project }
    topicDetails { topic }
    metricsInformation { url image score }
} }`;
}

export function personProfileQuery(orcid: string): string {
  return `{ person(id: ${quote(orcid)}) {
    id name
    employment { organizationName organizationId startDate endDate }
    publications {
      totalCount
      nodes { id type titles { title }
        fundingReferences { awardTitle awardNumber }
        creators { givenName familyName id } }
    }
    datasets { totalCount nodes { id type titles { title } } }
    softwares { totalCount nodes { id type titles { title } } }
    topics
} }`;
}

"""
Contributor profile: career, artifacts, interests
=================================================

The person root resolves through the PID graph in a single sub-request
(identity, employment history, publications/datasets/software connections),
while research interests come from the topics source.
"""

from dataclasses import replace

from scholarly_context import Gateway, default_config, normalize_orcid

config = replace(default_config("fixtures"), scenario="person_happy")
gateway = Gateway(config)

person = gateway.query_person(normalize_orcid("0000-0001-6383-7148")).data

print("name:", person.name)
print("employment, most recent first:")
for record in person.employment:
    end = record.end_date or "present"
    print(f"  {record.organization_name}: {record.start_date} → {end}")
assert person.employment[0].is_current

# Connections may be truncated pages; total_count stays authoritative.
print(f"publications: {person.publications.total_count} total, "
      f"{len(person.publications.nodes)} in this page")
for node in person.publications.nodes:
    print("  -", node.titles[0])
    for grant in node.funding:
        print("    funded by:", grant.funder, "| award:", grant.award_number)

print("datasets:", person.datasets.total_count,
      "| software:", person.softwares.total_count)
print("topics:", [t.label for t in person.topics])

"""Check every corpus entry against its recorded order, verdict and witnesses."""

from scg.verify import verify_corpus, verify_entry, verify_theorem_main

report = verify_corpus()
for e in report["entries"]:
    ip = e["ip"]
    print(f"{e['id']:12} {e['order']:>9} {e['group']!s:10} IP {ip['status']:5} via {ip['method']:15}"
          f" {'pass' if e['pass'] else 'FAIL'}")
print(report["summary"])

a1 = verify_entry("A1")
for w in a1["witnesses"]:
    print(f"  {w['name']} = {w['word']} = {w['value']}")
print("  orbit sets and 3-cycles:", a1["ipf4"])

summary = verify_theorem_main(include_search=False)
for name, check in summary["checks"].items():
    print(name, check)

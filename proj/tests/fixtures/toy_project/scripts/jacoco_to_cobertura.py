#!/usr/bin/env python3
"""Converts a JaCoCo XML report into the Cobertura layout the harness reads.

A method owns the source lines from its first line up to the next method's
first line in the same file.
"""
import sys
import xml.etree.ElementTree as ET


def convert(src, dst):
    report = ET.parse(src).getroot()
    coverage = ET.Element("coverage")
    packages = ET.SubElement(coverage, "packages")
    for pkg in report.iter("package"):
        pname = pkg.get("name", "").replace("/", ".")
        out_pkg = ET.SubElement(packages, "package", name=pname)
        classes = ET.SubElement(out_pkg, "classes")
        lines_by_file = {}
        for sf in pkg.findall("sourcefile"):
            lines_by_file[sf.get("name")] = sorted(
                (int(l.get("nr")), l) for l in sf.findall("line"))
        starts_by_file = {}
        for cls in pkg.findall("class"):
            for m in cls.findall("method"):
                if m.get("line"):
                    starts_by_file.setdefault(cls.get("sourcefilename"), []).append(int(m.get("line")))
        for starts in starts_by_file.values():
            starts.sort()
        for cls in pkg.findall("class"):
            fname = cls.get("sourcefilename")
            out_cls = ET.SubElement(classes, "class", name=cls.get("name").replace("/", "."),
                                    filename=pname.replace(".", "/") + "/" + fname)
            methods = ET.SubElement(out_cls, "methods")
            starts = starts_by_file.get(fname, [])
            for m in cls.findall("method"):
                out_m = ET.SubElement(methods, "method", name=m.get("name"), signature=m.get("desc"))
                out_lines = ET.SubElement(out_m, "lines")
                if not m.get("line"):
                    continue
                first = int(m.get("line"))
                later = [s for s in starts if s > first]
                end = later[0] if later else None
                for nr, line in lines_by_file.get(fname, []):
                    if nr < first or (end is not None and nr >= end):
                        continue
                    attrs = {"number": str(nr), "hits": "1" if int(line.get("ci", "0")) > 0 else "0"}
                    mb, cb = int(line.get("mb", "0")), int(line.get("cb", "0"))
                    if mb + cb > 0:
                        attrs["branch"] = "true"
                        attrs["condition-coverage"] = "%d%% (%d/%d)" % (100 * cb // (mb + cb), cb, mb + cb)
                    ET.SubElement(out_lines, "line", attrs)
    ET.ElementTree(coverage).write(dst, encoding="utf-8", xml_declaration=True)


if __name__ == "__main__":
    convert(sys.argv[1], sys.argv[2])

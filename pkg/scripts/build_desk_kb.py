#!/usr/bin/env python3
"""Regenerate the bundled desk-scale common-sense knowledge base.

Covers the three evaluation domains (environmental sensing, course
management, tactical control) with subject -> relation -> object
assertions and hand-assigned confidences. Output is deterministic.

Usage: python scripts/build_desk_kb.py
"""

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "cotir" / "data" / "cskb_desk.tsv"

# subject: relation: [(object, confidence), ...]
SENSOR_DOMAIN = {
    "sensor": {
        "hasProperty": [("calibrated", 0.95), ("battery-powered", 0.9), ("weatherproof", 0.8),
                        ("wireless", 0.75), ("drift-prone", 0.6)],
        "usedFor": [("measurement", 0.97), ("monitoring", 0.95), ("detection", 0.9)],
        "partOf": [("network", 0.9), ("node", 0.85)],
        "madeOf": [("transducer", 0.7), ("housing", 0.6)],
        "atLocation": [("field", 0.8), ("forest", 0.7), ("station", 0.6)],
        "capableOf": [("sampling", 0.85), ("failing", 0.55)],
    },
    "reading": {
        "hasProperty": [("timestamped", 0.95), ("numeric", 0.9), ("range-bounded", 0.85),
                        ("noisy", 0.6), ("suspicious", 0.4)],
        "usedFor": [("analysis", 0.9), ("alerting", 0.85), ("trending", 0.7)],
        "partOf": [("history", 0.8)],
        "requires": [("validation", 0.75), ("calibration", 0.6)],
    },
    "network": {
        "hasProperty": [("distributed", 0.9), ("wireless", 0.85), ("redundant", 0.6)],
        "usedFor": [("transmission", 0.9), ("coverage", 0.8)],
        "madeOf": [("node", 0.9), ("gateway", 0.8), ("link", 0.7)],
        "capableOf": [("failing", 0.5)],
    },
    "node": {
        "hasProperty": [("addressable", 0.9), ("low-power", 0.8), ("remote", 0.7)],
        "partOf": [("network", 0.95)],
        "madeOf": [("sensor", 0.85), ("radio", 0.8), ("battery", 0.75)],
        "atLocation": [("field", 0.7)],
    },
    "gateway": {
        "hasProperty": [("powered", 0.8), ("networked", 0.9)],
        "usedFor": [("aggregation", 0.85), ("forwarding", 0.8)],
        "partOf": [("network", 0.9)],
    },
    "battery": {
        "hasProperty": [("rechargeable", 0.8), ("finite", 0.9)],
        "usedFor": [("power", 0.95)],
        "partOf": [("node", 0.8)],
        "capableOf": [("draining", 0.85)],
    },
    "temperature": {
        "hasProperty": [("continuous", 0.8), ("seasonal", 0.6)],
        "usedFor": [("forecasting", 0.7), ("alerting", 0.6)],
    },
    "humidity": {
        "hasProperty": [("relative", 0.85), ("bounded", 0.8)],
        "usedFor": [("forecasting", 0.65)],
    },
    "pressure": {
        "hasProperty": [("atmospheric", 0.8)],
        "usedFor": [("forecasting", 0.7)],
    },
    "alarm": {
        "hasProperty": [("audible", 0.8), ("latched", 0.6), ("prioritized", 0.7)],
        "usedFor": [("notification", 0.9), ("escalation", 0.75)],
        "evokesEmotion": [("urgency", 0.8), ("alertness", 0.7)],
        "requires": [("acknowledgment", 0.8)],
    },
    "threshold": {
        "hasProperty": [("configurable", 0.9), ("numeric", 0.85), ("range-bounded", 0.8)],
        "usedFor": [("alerting", 0.85), ("classification", 0.7)],
    },
    "calibration": {
        "hasProperty": [("periodic", 0.85), ("traceable", 0.7)],
        "usedFor": [("accuracy", 0.9)],
        "requires": [("reference", 0.8)],
    },
    "measurement": {
        "hasProperty": [("repeatable", 0.8), ("uncertain", 0.7)],
        "usedFor": [("decision", 0.7), ("reporting", 0.8)],
        "requires": [("unit", 0.9)],
    },
    "data": {
        "hasProperty": [("structured", 0.7), ("perishable", 0.5), ("timestamped", 0.8)],
        "usedFor": [("analysis", 0.9), ("archiving", 0.8), ("display", 0.75)],
        "requires": [("storage", 0.85), ("backup", 0.7)],
    },
    "value": {
        "hasProperty": [("numeric", 0.9), ("bounded", 0.75), ("unit-bearing", 0.8)],
        "usedFor": [("comparison", 0.8)],
    },
    "signal": {
        "hasProperty": [("attenuated", 0.6), ("periodic", 0.5)],
        "usedFor": [("transmission", 0.85)],
        "capableOf": [("fading", 0.7)],
    },
    "noise": {
        "hasProperty": [("random", 0.8), ("unavoidable", 0.7)],
        "causes": [("error", 0.75)],
    },
    "sample": {
        "hasProperty": [("periodic", 0.8), ("discrete", 0.85)],
        "partOf": [("series", 0.8)],
    },
    "station": {
        "hasProperty": [("fixed", 0.8), ("powered", 0.7)],
        "atLocation": [("field", 0.75)],
    },
    "forest": {
        "hasProperty": [("remote", 0.7), ("humid", 0.5)],
        "evokesEmotion": [("calm", 0.5)],
    },
    "river": {
        "hasProperty": [("flowing", 0.9), ("seasonal", 0.6)],
        "hasShape": [("winding", 0.7)],
    },
    "map": {
        "hasProperty": [("layered", 0.8), ("scaled", 0.85)],
        "usedFor": [("navigation", 0.85), ("visualization", 0.9)],
    },
    "layer": {
        "hasProperty": [("toggleable", 0.8), ("ordered", 0.75), ("typed", 0.7)],
        "usedFor": [("filtering", 0.8), ("grouping", 0.75)],
        "partOf": [("map", 0.85)],
    },
    "panel": {
        "hasProperty": [("rectangular", 0.85), ("resizable", 0.7)],
        "hasShape": [("rectangle", 0.9)],
        "usedFor": [("display", 0.85)],
    },
    "display": {
        "hasProperty": [("graphical", 0.85), ("interactive", 0.8), ("real-time", 0.75)],
        "usedFor": [("inspection", 0.8), ("monitoring", 0.85)],
    },
    "history": {
        "hasProperty": [("append-only", 0.8), ("bounded", 0.7), ("time-ordered", 0.9)],
        "usedFor": [("audit", 0.85), ("trending", 0.8), ("comparison", 0.7)],
        "requires": [("retention-period", 0.85), ("storage", 0.8)],
    },
    "malfunction": {
        "hasProperty": [("intermittent", 0.6), ("detectable", 0.7)],
        "causes": [("outage", 0.7), ("alarm", 0.8)],
        "requires": [("repair", 0.85)],
        "evokesEmotion": [("concern", 0.6)],
    },
    "configuration": {
        "hasProperty": [("range-bounded", 0.9), ("persistent", 0.85), ("versioned", 0.8),
                        ("user-editable", 0.75)],
        "usedFor": [("tuning", 0.85), ("calibration", 0.7)],
        "requires": [("authorization", 0.8), ("validation", 0.75)],
    },
    "range": {
        "hasProperty": [("bounded", 0.95), ("numeric", 0.85)],
        "madeOf": [("minimum", 0.9), ("maximum", 0.9)],
        "usedFor": [("validation", 0.85)],
    },
    "endangerment": {
        "hasProperty": [("graded", 0.8), ("area-specific", 0.7)],
        "usedFor": [("escalation", 0.75), ("warning", 0.85)],
    },
    "environment": {
        "hasProperty": [("dynamic", 0.7), ("observable", 0.8)],
        "evokesEmotion": [("care", 0.5)],
    },
    "user": {
        "hasProperty": [("authenticated", 0.85), ("role-bound", 0.8), ("fallible", 0.6)],
        "capableOf": [("validation", 0.8), ("configuration", 0.75), ("error", 0.6)],
        "motivatedByGoal": [("awareness", 0.7), ("safety", 0.75)],
    },
    "operator": {
        "hasProperty": [("trained", 0.8), ("on-duty", 0.7)],
        "capableOf": [("override", 0.8), ("acknowledgment", 0.85)],
        "motivatedByGoal": [("uptime", 0.75)],
    },
    "water": {
        "hasProperty": [("transparent", 0.8), ("conductive", 0.6)],
        "hasTaste": [("fresh", 0.6), ("brackish", 0.3)],
        "hasShape": [("formless", 0.7)],
    },
    "antenna": {
        "hasProperty": [("directional", 0.7), ("mounted", 0.8)],
        "usedFor": [("transmission", 0.9), ("reception", 0.9)],
        "partOf": [("node", 0.7)],
    },
    "radio": {
        "hasProperty": [("duty-cycled", 0.7), ("licensed", 0.5)],
        "usedFor": [("communication", 0.9)],
        "requires": [("power", 0.85), ("antenna", 0.8)],
    },
    "link": {
        "hasProperty": [("lossy", 0.6), ("bidirectional", 0.7)],
        "partOf": [("network", 0.85)],
        "capableOf": [("congestion", 0.6)],
    },
    "storage": {
        "hasProperty": [("finite", 0.9), ("durable", 0.8)],
        "usedFor": [("retention", 0.9), ("archiving", 0.85)],
        "requires": [("quota", 0.6)],
    },
    "archive": {
        "hasProperty": [("compressed", 0.7), ("read-only", 0.8), ("dated", 0.75)],
        "usedFor": [("audit", 0.8), ("recovery", 0.7)],
    },
    "backup": {
        "hasProperty": [("scheduled", 0.85), ("verified", 0.7), ("offsite", 0.6)],
        "usedFor": [("recovery", 0.9)],
        "requires": [("storage", 0.85)],
    },
    "retention": {
        "hasProperty": [("policy-bound", 0.85), ("time-limited", 0.9)],
        "requires": [("period", 0.9)],
    },
    "warning": {
        "hasProperty": [("timely", 0.8), ("graded", 0.7)],
        "usedFor": [("prevention", 0.8)],
        "evokesEmotion": [("caution", 0.8)],
    },
    "notification": {
        "hasProperty": [("delivered", 0.8), ("acknowledgeable", 0.7), ("routed", 0.6)],
        "usedFor": [("awareness", 0.85)],
        "requires": [("recipient", 0.9), ("channel", 0.8)],
    },
    "dot": {
        "hasProperty": [("small", 0.85), ("colored", 0.7)],
        "hasShape": [("round", 0.9)],
        "usedFor": [("marking", 0.8)],
    },
    "symbol": {
        "hasProperty": [("conventional", 0.75), ("legend-bound", 0.7)],
        "usedFor": [("identification", 0.8), ("marking", 0.75)],
    },
    "marker": {
        "hasProperty": [("clickable", 0.75), ("positioned", 0.85)],
        "usedFor": [("selection", 0.8)],
        "partOf": [("panel", 0.7)],
    },
    "selection": {
        "hasProperty": [("reversible", 0.7), ("visual", 0.75)],
        "usedFor": [("filtering", 0.8), ("inspection", 0.7)],
    },
    "representation": {
        "hasProperty": [("schematic", 0.7), ("scaled", 0.65)],
        "usedFor": [("visualization", 0.85)],
    },
    "year": {
        "hasProperty": [("calendar-bound", 0.85), ("fixed-length", 0.8)],
        "madeOf": [("month", 0.9), ("day", 0.85)],
        "usedFor": [("retention", 0.7)],
    },
}

COURSE_DOMAIN = {
    "course": {
        "hasProperty": [("scheduled", 0.9), ("credit-bearing", 0.85), ("enrollable", 0.8)],
        "madeOf": [("lecture", 0.8), ("assignment", 0.75), ("exam", 0.7)],
        "requires": [("teacher", 0.9), ("roster", 0.7)],
    },
    "student": {
        "hasProperty": [("enrolled", 0.9), ("graded", 0.8)],
        "capableOf": [("submission", 0.85), ("enrollment", 0.8), ("withdrawal", 0.6)],
        "motivatedByGoal": [("graduation", 0.85), ("learning", 0.8)],
    },
    "teacher": {
        "hasProperty": [("assigned", 0.8), ("qualified", 0.85)],
        "capableOf": [("grading", 0.9), ("publication", 0.7)],
        "motivatedByGoal": [("teaching", 0.85)],
    },
    "grade": {
        "hasProperty": [("final", 0.7), ("numeric", 0.75), ("auditable", 0.8)],
        "usedFor": [("ranking", 0.6), ("feedback", 0.8)],
        "requires": [("rubric", 0.7)],
    },
    "exam": {
        "hasProperty": [("timed", 0.85), ("proctored", 0.7), ("graded", 0.9)],
        "evokesEmotion": [("stress", 0.75)],
        "requires": [("registration", 0.7)],
    },
    "assignment": {
        "hasProperty": [("deadline-bound", 0.9), ("graded", 0.85), ("submittable", 0.8)],
        "usedFor": [("practice", 0.75), ("assessment", 0.85)],
    },
    "enrollment": {
        "hasProperty": [("capacity-limited", 0.85), ("term-bound", 0.8)],
        "requires": [("prerequisite", 0.75), ("approval", 0.6)],
    },
    "roster": {
        "hasProperty": [("ordered", 0.6), ("current", 0.8)],
        "usedFor": [("attendance", 0.8), ("communication", 0.7)],
        "madeOf": [("student", 0.9)],
    },
    "semester": {
        "hasProperty": [("fixed-length", 0.85), ("recurring", 0.8)],
        "madeOf": [("week", 0.8)],
    },
    "lecture": {
        "hasProperty": [("scheduled", 0.85), ("recorded", 0.6)],
        "atLocation": [("classroom", 0.8)],
        "partOf": [("course", 0.9)],
    },
    "syllabus": {
        "hasProperty": [("published", 0.8), ("versioned", 0.6)],
        "usedFor": [("planning", 0.8)],
        "partOf": [("course", 0.85)],
    },
    "classroom": {
        "hasProperty": [("bookable", 0.8), ("capacity-limited", 0.85)],
        "hasShape": [("rectangular", 0.7)],
    },
    "material": {
        "hasProperty": [("downloadable", 0.8), ("versioned", 0.7), ("copyrighted", 0.6)],
        "usedFor": [("study", 0.85)],
    },
    "email": {
        "hasProperty": [("addressed", 0.9), ("archived", 0.7)],
        "usedFor": [("notification", 0.85), ("communication", 0.9)],
    },
    "tutor": {
        "hasProperty": [("assigned", 0.7), ("available", 0.6)],
        "capableOf": [("feedback", 0.85), ("grading", 0.7)],
    },
    "quiz": {
        "hasProperty": [("short", 0.8), ("auto-graded", 0.7), ("timed", 0.75)],
        "usedFor": [("assessment", 0.8), ("practice", 0.7)],
    },
    "submission": {
        "hasProperty": [("timestamped", 0.9), ("deadline-bound", 0.85), ("versioned", 0.6)],
        "requires": [("upload", 0.8)],
    },
    "transcript": {
        "hasProperty": [("official", 0.85), ("sealed", 0.6), ("cumulative", 0.8)],
        "usedFor": [("verification", 0.8)],
    },
    "schedule": {
        "hasProperty": [("published", 0.85), ("conflict-free", 0.7)],
        "usedFor": [("planning", 0.85), ("booking", 0.7)],
        "madeOf": [("slot", 0.8)],
    },
    "deadline": {
        "hasProperty": [("fixed", 0.8), ("enforced", 0.75)],
        "evokesEmotion": [("stress", 0.7), ("urgency", 0.8)],
    },
}

CONTROL_DOMAIN = {
    "controller": {
        "hasProperty": [("real-time", 0.85), ("redundant", 0.7), ("certified", 0.6)],
        "capableOf": [("regulation", 0.9), ("shutdown", 0.8)],
        "partOf": [("loop", 0.85)],
    },
    "actuator": {
        "hasProperty": [("powered", 0.85), ("rate-limited", 0.7)],
        "usedFor": [("movement", 0.85), ("positioning", 0.8)],
        "capableOf": [("sticking", 0.5)],
    },
    "valve": {
        "hasProperty": [("open", 0.5), ("fail-safe", 0.7)],
        "usedFor": [("flow-control", 0.9)],
        "capableOf": [("leaking", 0.55)],
        "hasShape": [("round", 0.6)],
    },
    "pump": {
        "hasProperty": [("rated", 0.8), ("noisy", 0.6)],
        "usedFor": [("circulation", 0.85)],
        "requires": [("power", 0.9), ("maintenance", 0.8)],
    },
    "setpoint": {
        "hasProperty": [("numeric", 0.9), ("bounded", 0.85), ("operator-set", 0.8)],
        "usedFor": [("regulation", 0.9)],
    },
    "feedback": {
        "hasProperty": [("delayed", 0.6), ("filtered", 0.7)],
        "usedFor": [("correction", 0.85), ("stability", 0.8)],
    },
    "loop": {
        "hasProperty": [("closed", 0.8), ("tuned", 0.75)],
        "madeOf": [("sensor", 0.85), ("controller", 0.9), ("actuator", 0.85)],
    },
    "plant": {
        "hasProperty": [("nonlinear", 0.6), ("instrumented", 0.8)],
        "atLocation": [("site", 0.75)],
    },
    "command": {
        "hasProperty": [("logged", 0.85), ("authorized", 0.8), ("timestamped", 0.75)],
        "requires": [("acknowledgment", 0.7)],
    },
    "override": {
        "hasProperty": [("manual", 0.9), ("audited", 0.8), ("temporary", 0.7)],
        "requires": [("authorization", 0.9)],
        "evokesEmotion": [("caution", 0.7)],
    },
    "interlock": {
        "hasProperty": [("fail-safe", 0.85), ("hardwired", 0.7)],
        "usedFor": [("protection", 0.9)],
    },
    "safety": {
        "hasProperty": [("non-negotiable", 0.8), ("audited", 0.75)],
        "motivatedByGoal": [("protection", 0.9)],
    },
    "shutdown": {
        "hasProperty": [("ordered", 0.8), ("irreversible", 0.5)],
        "usedFor": [("protection", 0.85)],
        "evokesEmotion": [("urgency", 0.75)],
    },
    "telemetry": {
        "hasProperty": [("periodic", 0.85), ("compressed", 0.6)],
        "usedFor": [("monitoring", 0.9), ("diagnosis", 0.8)],
    },
    "mission": {
        "hasProperty": [("planned", 0.85), ("time-critical", 0.75)],
        "requires": [("authorization", 0.85), ("briefing", 0.7)],
        "motivatedByGoal": [("objective", 0.85)],
    },
    "waypoint": {
        "hasProperty": [("ordered", 0.85), ("geo-referenced", 0.9)],
        "partOf": [("route", 0.9)],
    },
    "route": {
        "hasProperty": [("planned", 0.8), ("revisable", 0.7)],
        "madeOf": [("waypoint", 0.9)],
        "usedFor": [("navigation", 0.9)],
    },
    "payload": {
        "hasProperty": [("mission-specific", 0.8), ("weight-limited", 0.85)],
        "partOf": [("vehicle", 0.8)],
    },
    "vehicle": {
        "hasProperty": [("unmanned", 0.6), ("tracked", 0.7), ("fueled", 0.75)],
        "capableOf": [("navigation", 0.85), ("loitering", 0.6)],
        "requires": [("operator", 0.8), ("maintenance", 0.85)],
    },
    "console": {
        "hasProperty": [("interactive", 0.85), ("multi-screen", 0.6)],
        "usedFor": [("command", 0.85), ("monitoring", 0.85)],
        "atLocation": [("station", 0.8)],
    },
    "uplink": {
        "hasProperty": [("encrypted", 0.85), ("bandwidth-limited", 0.8)],
        "usedFor": [("command", 0.85)],
    },
    "downlink": {
        "hasProperty": [("encrypted", 0.85), ("lossy", 0.6)],
        "usedFor": [("telemetry", 0.9), ("imagery", 0.7)],
    },
}


def main() -> None:
    rows = []
    for domain in (SENSOR_DOMAIN, COURSE_DOMAIN, CONTROL_DOMAIN):
        for subject in sorted(domain):
            for relation in sorted(domain[subject]):
                for obj, conf in sorted(domain[subject][relation]):
                    rows.append((subject, relation, obj, conf))
    subjects = {r[0] for r in rows}
    with open(OUT, "w", encoding="utf-8") as fh:
        fh.write("# desk-scale common-sense knowledge base\n")
        fh.write("# domains: environmental sensing, course management, tactical control\n")
        fh.write(f"# triples: {len(rows)}\n")
        fh.write(f"# subjects: {len(subjects)}\n")
        for subject, relation, obj, conf in rows:
            fh.write(f"{subject}\t{relation}\t{obj}\t{conf:g}\n")
    print(f"wrote {OUT} ({len(rows)} triples, {len(subjects)} subjects)")


if __name__ == "__main__":
    main()

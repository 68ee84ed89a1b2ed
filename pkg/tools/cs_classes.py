"""Extract Checkstyle check names and setter-derived properties from the 8.24 jar.

    python3 tools/cs_classes.py checkstyle-8.24-all.jar tools/raw/cs_checks.json
"""
import json, re, struct, sys, zipfile

JAR, OUT = sys.argv[1], sys.argv[2]
z = zipfile.ZipFile(JAR)

def parse(data):
    pos = 8
    cnt, = struct.unpack('>H', data[pos:pos+2]); pos += 2
    cp = [None]*cnt
    i = 1
    while i < cnt:
        tag = data[pos]; pos += 1
        if tag == 1:
            ln, = struct.unpack('>H', data[pos:pos+2]); pos += 2
            cp[i] = ('utf8', data[pos:pos+ln].decode('utf8', 'replace')); pos += ln
        elif tag in (3, 4):
            pos += 4
        elif tag in (5, 6):
            pos += 8; i += 1
        elif tag == 7:
            cp[i] = ('class', struct.unpack('>H', data[pos:pos+2])[0]); pos += 2
        elif tag == 8:
            pos += 2
        elif tag in (9, 10, 11, 12):
            pos += 4
        elif tag == 15:
            pos += 3
        elif tag == 16:
            pos += 2
        elif tag == 18:
            pos += 4
        elif tag in (19, 20):
            pos += 2
        else:
            raise ValueError(tag)
        i += 1
    flags, this, sup = struct.unpack('>HHH', data[pos:pos+6]); pos += 6
    u = lambda k: cp[k][1]
    name = u(cp[this][1]); supn = u(cp[sup][1]) if sup else None
    ic, = struct.unpack('>H', data[pos:pos+2]); pos += 2 + 2*ic
    def members(pos):
        n, = struct.unpack('>H', data[pos:pos+2]); pos += 2
        res = []
        for _ in range(n):
            fl, ni, di, ac = struct.unpack('>HHHH', data[pos:pos+8]); pos += 8
            for _ in range(ac):
                _, al = struct.unpack('>HI', data[pos:pos+6]); pos += 6 + al
            res.append((fl, u(ni), u(di)))
        return res, pos
    fields, pos = members(pos)
    methods, pos = members(pos)
    return dict(name=name, sup=supn, flags=flags, fields=fields, methods=methods)

classes = {}
for n in z.namelist():
    if n.startswith('com/puppycrawl/tools/checkstyle/') and n.endswith('.class'):
        classes[n[:-6]] = parse(z.read(n))

def ancestors(c):
    out = []
    while c in classes:
        out.append(c); c = classes[c]['sup']
    return out

def typ(desc):
    arg = re.match(r'\((.*)\)V', desc)
    if not arg: return None
    a = arg.group(1)
    if a == 'Z': return ('boolean', None)
    if a in ('I', 'J'): return ('integer', None)
    if a == 'D': return ('other(number)', None)
    if a == 'Ljava/lang/String;': return ('string', None)
    if a == 'Ljava/util/regex/Pattern;': return ('regex', None)
    if a == '[Ljava/lang/String;': return ('set', None)
    if a == '[I': return ('set', None)
    if a == '[Ljava/util/regex/Pattern;': return ('set', None)
    if a == 'Ljava/net/URI;': return ('other(uri)', None)
    m = re.match(r'L(.*);$', a)
    if m and m.group(1) in classes and classes[m.group(1)]['flags'] & 0x4000:
        e = classes[m.group(1)]
        lits = [f[1] for f in e['fields'] if f[0] & 0x4000]
        return ('enum', lits)
    if m: return ('other(%s)' % m.group(1).split('/')[-1], None)
    return ('other(%s)' % a, None)

SKIP = {'setSeverity', 'setId', 'setFileExtensions', 'setCharset', 'setTabWidth', 'setFileContents', 'setMessages', 'setClassLoader', 'setModuleFactory', 'setTokens', 'setViolationMessages'}
checks = {}
for cn, c in classes.items():
    if not cn.startswith('com/puppycrawl/tools/checkstyle/checks/') or '$' in cn: continue
    if not cn.endswith('Check') or c['flags'] & 0x0400: continue
    anc = ancestors(cn)
    props = {}
    for a in anc:
        for fl, mn, desc in classes[a]['methods']:
            if fl & 0x0001 and mn.startswith('set') and len(mn) > 3 and mn not in SKIP:
                t = typ(desc)
                if t is None: continue
                pn = mn[3].lower() + mn[4:]
                props.setdefault(pn, t)
    treewalker = 'com/puppycrawl/tools/checkstyle/api/AbstractCheck' in anc
    methods = {m[1] for a in anc[:-1] for m in classes[a]['methods'] if a != 'com/puppycrawl/tools/checkstyle/api/AbstractCheck'}
    name = cn.split('/')[-1][:-5]
    checks[name] = dict(package=cn.split('/')[-2] if cn.split('/')[-2] != 'checks' else 'misc', treewalker=treewalker, props=props,
                        acceptable='getAcceptableTokens' in {m[1] for m in c['methods']}, required='getRequiredTokens' in {m[1] for m in c['methods']})
with open(OUT, 'w') as fh:
    json.dump(checks, fh, indent=1, sort_keys=True)
print(len(checks))

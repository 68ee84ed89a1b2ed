"""Hand-written model answers behind the shipped replay fixture.

Keys are gateway request tags. A key of the form ``<profile>/<tag>`` applies
only to that pipeline profile. Answers are written the way a capable model
would reply to the stage prompts; they were not produced by one.
"""

FIXTURE_MODEL = "fixture-scripted"

# configuration -> options kept from the full docs
FIXTURE_CONFIGS = {
    "PackageDeclaration": ["matchDirectoryStructure"],
    "EmptyLineSeparator": ["allowMultipleEmptyLines", "allowNoEmptyLineBetweenFields", "tokens"],
    "OuterTypeFilename": [],
    "OneTopLevelClass": [],
    "AvoidStarImport": ["allowClassImports", "allowStaticMemberImports"],
    "LineLength": ["ignorePattern", "max"],
    "NeedBraces": ["allowSingleLineStatement", "tokens"],
    "OneStatementPerLine": ["treatTryResourcesAsStatement"],
    "ParenPad": ["option"],
    "NoFinalizer": [],
    "ModifierOrder": [],
    "FileTabCharacter": ["eachLine"],
    "UpperEll": [],
    "NoLineWrap": ["tokens"],
    "ArrayTypeStyle": ["javaStyle"],
    "MissingSwitchDefault": [],
}

FIXTURE_STANDARDS = [
    "java-source-file-structure",
    "java-file-name",
    "java-file-encoding",
    "java-license",
    "java-no-wildcard-imports",
    "java-column-limit",
    "java-optional-braces",
    "java-one-statement-per-line",
    "java-paren-padding",
    "java-finalizers",
]

# ---------------------------------------------------------------------------
# instruction building
# ---------------------------------------------------------------------------

INSTRUCTIONS = {
    "classify:PackageDeclaration": "0: yes\n1: no",
    "general:PackageDeclaration:0": "Mandatory: [Class] have [PackageDeclaration]",
    "option:PackageDeclaration:matchDirectoryStructure":
        "true: Mandatory: [PackageName] match [DirectoryPath]\n"
        "false: Optional: [PackageName] match [DirectoryPath]",

    "classify:EmptyLineSeparator": "0: yes\n1: yes",
    "general:EmptyLineSeparator:0":
        "Mandatory: Number of [BlankLine] before [Package, Import, Field, Constructor, Method] is [1]",
    "general:EmptyLineSeparator:1": "Mandatory: Number of [BlankLine] after [HeaderComment] is [1]",
    "option:EmptyLineSeparator:allowMultipleEmptyLines":
        "true: Optional: Number of [BlankLine] between [ClassMember] > [1]\n"
        "false: Mandatory: Number of [BlankLine] between [ClassMember] <= [1]",
    "option:EmptyLineSeparator:allowNoEmptyLineBetweenFields":
        "true: Optional: Number of [BlankLine] between [Field] is [0]\n"
        "false: Mandatory: Number of [BlankLine] between [Field] is [1]",
    "option:EmptyLineSeparator:tokens": "Mandatory: Number of [BlankLine] between {tokens} is [1]",

    "classify:OuterTypeFilename": "0: yes",
    "general:OuterTypeFilename:0": "Mandatory: [OuterTypeName] equal [FileName]",

    "classify:OneTopLevelClass": "0: yes",
    "general:OneTopLevelClass:0": "Mandatory: Number of [TopLevelClass] in [SourceFile] is [1]",

    "classify:AvoidStarImport": "0: yes\n1: no",
    "general:AvoidStarImport:0": "Mandatory: No [Import] use [StarNotation]",
    "option:AvoidStarImport:allowClassImports":
        "true: Optional: [ClassImport] use [StarNotation]\n"
        "false: Mandatory: No [ClassImport] use [StarNotation]",
    "option:AvoidStarImport:allowStaticMemberImports":
        "true: Optional: [StaticImport] use [StarNotation]\n"
        "false: Mandatory: No [StaticImport] use [StarNotation]",

    "classify:LineLength": "0: yes\n1: no",
    "general:LineLength:0": "Mandatory: [LineLength] <= [80]",
    "option:LineLength:ignorePattern": "Mandatory: [LineLength] <= [80] Except [Line] match {ignorePattern}",
    "option:LineLength:max": "Mandatory: [LineLength] <= {max}",

    "classify:NeedBraces": "0: yes",
    "general:NeedBraces:0": "Mandatory: [CodeBlock] have [Brace]",
    "option:NeedBraces:allowSingleLineStatement":
        "true: Optional: No [SingleLineStatement] have [Brace]\n"
        "false: Mandatory: [SingleLineStatement] have [Brace]",
    "option:NeedBraces:tokens": "Mandatory: {tokens} have [Brace]",

    "classify:OneStatementPerLine": "0: yes",
    "general:OneStatementPerLine:0": "Mandatory: Number of [Statement] in [Line] <= [1]",
    "option:OneStatementPerLine:treatTryResourcesAsStatement":
        "true: Mandatory: Number of [Statement, TryResource] in [Line] <= [1]\n"
        "false: Optional: Number of [TryResource] in [Line] > [1]",

    "classify:ParenPad": "0: yes",
    "general:ParenPad:0": "Mandatory: [Parenthesis] follow [PaddingPolicy]",
    "option:ParenPad:option":
        "nospace: Mandatory: No [Parenthesis] have [InnerSpace]\n"
        "space: Mandatory: [Parenthesis] have [InnerSpace]",

    "classify:NoFinalizer": "0: yes",
    "general:NoFinalizer:0": "Mandatory: No [Method] override [Finalize]",

    "classify:ModifierOrder": "0: yes",
    "general:ModifierOrder:0": (
        "Mandatory: Order of [Modifier] is [Annotation, Public, Protected, Private, Abstract, Default, "
        "Static, Final, Transient, Volatile, Synchronized, Native, Strictfp]"),

    "classify:FileTabCharacter": "0: yes",
    "general:FileTabCharacter:0": "Mandatory: No [SourceFile] contain [TabCharacter]",
    "option:FileTabCharacter:eachLine":
        "true: Mandatory: No [Line] contain [TabCharacter]\n"
        "false: Mandatory: No [SourceFile] contain [TabCharacter]",

    "classify:UpperEll": "0: yes\n1: no",
    "general:UpperEll:0": "Mandatory: [LongLiteral] end with [UpperL]",

    "classify:NoLineWrap": "0: yes",
    "general:NoLineWrap:0": "Mandatory: No [Import, PackageDeclaration] have [LineWrap]",
    "option:NoLineWrap:tokens": "Mandatory: No {tokens} have [LineWrap]",

    "classify:ArrayTypeStyle": "0: yes\n1: no",
    "general:ArrayTypeStyle:0": "Mandatory: [ArrayBracket] after [Type]",
    "option:ArrayTypeStyle:javaStyle":
        "true: Mandatory: [ArrayBracket] after [Type]\n"
        "false: Mandatory: [ArrayBracket] after [VariableName]",

    "classify:MissingSwitchDefault": "0: yes",
    "general:MissingSwitchDefault:0": "Mandatory: [SwitchStatement] have [DefaultClause]",
}

# ---------------------------------------------------------------------------
# pipeline, default profile
# ---------------------------------------------------------------------------

YES3 = ("rule_type: yes - both are mandatory\n"
        "objects: yes - {objects}\n"
        "semantics: yes - {semantics}")

PIPELINE = {
    # the four-rule walkthrough: only the package rule survives
    "stage1:java-source-file-structure": (
        "1. Mandatory: [SourceFile] have [PackageStatement]\n"
        "2. Mandatory: Order of [SourceFile] is [LicenseComment, PackageStatement, ImportStatement, "
        "TopLevelClass]\n"
        "3. Optional: [SourceFile] have [LicenseComment]\n"
        "4. Mandatory: Number of [BlankLine] between [Section] is [1]"),
    "stage2:java-source-file-structure": "1: PackageDeclaration\n2: NONE\n3: NONE\n4: EmptyLineSeparator",
    "stage3:java-source-file-structure": (
        "rule 1 | PackageDeclaration | - | -\n"
        "rule 4 | EmptyLineSeparator | tokens | PACKAGE_DEF, CLASS_DEF"),
    "stage4:java-source-file-structure:PackageDeclaration": YES3.format(
        objects="a package declaration of the file's class is the source file's package statement",
        semantics="both require the package statement to be present"),
    "stage4:java-source-file-structure:EmptyLineSeparator": (
        "rule_type: yes - both are mandatory\n"
        "objects: no - the coding rule covers every section of the file, the option only package "
        "and class definitions\n"
        "semantics: yes - both ask for one blank line"),

    "stage1:java-file-name": (
        "1. Mandatory: [SourceFileName] equal [TopLevelClassName]\n"
        "2. Mandatory: Number of [TopLevelClass] in [SourceFile] is [1]"),
    # FileNameMatchesClass does not exist; stage 2 must drop it
    "stage2:java-file-name": "1: OuterTypeFilename, FileNameMatchesClass\n2: OneTopLevelClass",
    "stage3:java-file-name": ("rule 1 | OuterTypeFilename | - | -\n"
                              "rule 2 | OneTopLevelClass | - | -"),
    "stage4:java-file-name:OuterTypeFilename": YES3.format(
        objects="the outer type is the top-level class and the file name is the source file name",
        semantics="both require the file to be named after its class"),
    "stage4:java-file-name:OneTopLevelClass": YES3.format(
        objects="same objects", semantics="both allow exactly one top-level class per file"),

    "stage1:java-file-encoding": "1. Mandatory: [SourceFile] use [UTF8Encoding]",
    "stage2:java-file-encoding": "1: NONE",

    "stage1:java-license": "NONE",

    "stage1:java-no-wildcard-imports": "1. Mandatory: No [Import, StaticImport] use [Wildcard]",
    # NoWildcardImports is invented as well
    "stage2:java-no-wildcard-imports": "1: AvoidStarImport, NoWildcardImports",
    "stage3:java-no-wildcard-imports": (
        "rule 1 | AvoidStarImport | allowClassImports | false\n"
        "rule 1 | AvoidStarImport | allowStaticMemberImports | false\n"
        "rule 1 | NoWildcardImports | - | -"),
    "stage4:java-no-wildcard-imports:AvoidStarImport": YES3.format(
        objects="class and static imports written with the star", semantics="both forbid wildcard imports"),

    "stage1:java-column-limit": (
        "1. Mandatory: [LineLength] <= [100] Except [Line] contain [PackageStatement, ImportStatement, URL, "
        "CommandLine]"),
    "stage2:java-column-limit": "1: LineLength",
    "stage3:java-column-limit": (
        "rule 1 | LineLength | max | 100\n"
        "rule 1 | LineLength | ignorePattern | ^package.*|^import.*|a href|href|http://|https://|ftp://"),
    "stage4:java-column-limit:LineLength": YES3.format(
        objects="line length, with package, import and URL lines exempt",
        semantics="both cap lines at 100 columns with the same exemptions"),

    "stage1:java-optional-braces": (
        "1. Mandatory: [IfStatement, ElseStatement, ForStatement, DoStatement, WhileStatement] have [Brace]"),
    "stage2:java-optional-braces": "1: NeedBraces",
    "stage3:java-optional-braces": (
        "rule 1 | NeedBraces | tokens | LITERAL_DO, LITERAL_ELSE, LITERAL_FOR, LITERAL_IF, LITERAL_WHILE\n"
        "rule 1 | NeedBraces | allowSingleLineStatement | sometimes"),
    "stage4:java-optional-braces:NeedBraces": YES3.format(
        objects="the tokens name the same five statements", semantics="both require braces"),

    "stage1:java-one-statement-per-line": "1. Mandatory: Number of [Statement] in [Line] <= [1]",
    "stage2:java-one-statement-per-line": "1: OneStatementPerLine",
    "stage3:java-one-statement-per-line": "rule 1 | OneStatementPerLine | - | -",
    "stage4:java-one-statement-per-line:OneStatementPerLine": YES3.format(
        objects="same objects", semantics="both allow one statement per line"),

    "stage1:java-paren-padding": "1. Mandatory: No [Parenthesis] have [InnerSpace]",
    "stage2:java-paren-padding": "1: ParenPad",
    "stage3:java-paren-padding": "rule 1 | ParenPad | option | nospace",
    "stage4:java-paren-padding:ParenPad": YES3.format(
        objects="same objects", semantics="both forbid spaces inside parentheses"),

    # the first answer is malformed so the replay covers the repair turn
    "stage1:java-finalizers": "1. Mandatory: No [Method override [Finalize]",
    "stage1:java-finalizers#repair": "1. Mandatory: No [Method] override [Finalize]",
    "stage2:java-finalizers": "1: NoFinalizer",
    "stage3:java-finalizers": "rule 1 | NoFinalizer | - | -",
    "stage4:java-finalizers:NoFinalizer": YES3.format(
        objects="same objects", semantics="both forbid overriding finalize"),
}

# no_selector offers every configuration at stage 3; the model picks one more
PIPELINE_NO_SELECTOR = {
    "stage3:java-source-file-structure": (
        "rule 1 | PackageDeclaration | - | -\n"
        "rule 2 | OneTopLevelClass | - | -\n"
        "rule 4 | EmptyLineSeparator | tokens | PACKAGE_DEF, CLASS_DEF"),
    "stage4:java-source-file-structure:OneTopLevelClass": (
        "rule_type: yes - both are mandatory\n"
        "objects: no - the coding rule orders sections, the check counts top-level classes\n"
        "semantics: no - ordering is not required by the check"),
    "stage3:java-file-encoding": "NONE",
    "stage3:java-column-limit": (
        "rule 1 | LineLength | max | 100\n"
        "rule 1 | LineLength | ignorePattern | ^package.*|^import.*|a href|href|http://|https://|ftp://\n"
        "rule 1 | FileTabCharacter | - | -"),
    "stage4:java-column-limit:FileTabCharacter": (
        "rule_type: yes - both are mandatory\n"
        "objects: no - tabs are not line length\n"
        "semantics: no - unrelated requirement"),
}

# no_dsl: the standard's own text is coding rule 1 everywhere
PIPELINE_NO_DSL = {
    "stage2:java-source-file-structure": "1: PackageDeclaration, EmptyLineSeparator, OneTopLevelClass",
    "stage3:java-source-file-structure": (
        "rule 1 | PackageDeclaration | - | -\n"
        "rule 1 | EmptyLineSeparator | allowNoEmptyLineBetweenFields | false\n"
        "rule 1 | OneTopLevelClass | - | -"),
    "stage4:java-source-file-structure:EmptyLineSeparator": (
        "rule_type: yes - both are mandatory\n"
        "objects: yes - blank lines between parts of the file\n"
        "semantics: yes - both ask for single blank lines"),
    "stage2:java-file-name": "1: OuterTypeFilename, OneTopLevelClass",
    "stage3:java-file-name": "rule 1 | OuterTypeFilename | - | -\nrule 1 | OneTopLevelClass | - | -",
    "stage2:java-file-encoding": "1: NONE",
    "stage2:java-license": "1: NONE",
    "stage2:java-no-wildcard-imports": "1: AvoidStarImport",
    "stage3:java-no-wildcard-imports": "rule 1 | AvoidStarImport | - | -",
    "stage2:java-column-limit": "1: LineLength",
    "stage3:java-column-limit": "rule 1 | LineLength | max | 100",
    "stage2:java-optional-braces": "1: NeedBraces",
    "stage3:java-optional-braces": "rule 1 | NeedBraces | - | -",
    "stage2:java-one-statement-per-line": "1: OneStatementPerLine",
    "stage3:java-one-statement-per-line": "rule 1 | OneStatementPerLine | - | -",
    "stage2:java-paren-padding": "1: ParenPad",
    "stage3:java-paren-padding": "rule 1 | ParenPad | option | space",
    "stage2:java-finalizers": "1: NoFinalizer",
    "stage3:java-finalizers": "rule 1 | NoFinalizer | - | -",
}

# any stage-4 question not listed above is answered yes
STAGE4_DEFAULT = ("rule_type: yes - same rule type\n"
                  "objects: yes - same program objects\n"
                  "semantics: yes - same requirement")

# ---------------------------------------------------------------------------
# baselines: one answer per standard, the same for every kind unless overridden
# ---------------------------------------------------------------------------

BASELINES = {
    "java-source-file-structure": ("PackageDeclaration | - | -\n"
                                   "EmptyLineSeparator | tokens | PACKAGE_DEF, IMPORT, CLASS_DEF\n"
                                   "OneTopLevelClass | - | -"),
    "java-file-name": "OuterTypeFilename | - | -\nOneTopLevelClass | - | -",
    "java-file-encoding": "FileEncoding | charset | UTF-8",
    "java-license": "Header | headerFile | LICENSE",
    "java-no-wildcard-imports": "AvoidStarImport | - | -",
    "java-column-limit": "LineLength | max | 100",
    "java-optional-braces": "NeedBraces | - | -",
    "java-one-statement-per-line": "OneStatementPerLine | - | -",
    "java-paren-padding": "ParenPad | option | nospace\nMethodParamPad | option | nospace",
    "java-finalizers": "NoFinalizer | - | -",
}

BASELINE_OVERRIDES = {
    # without tool information the model invents names
    "closed_book": {
        "java-file-name": "FileNameMatchesClass | - | -\nOneTopLevelClass | - | -",
        "java-no-wildcard-imports": "NoWildcardImports | - | -",
        "java-optional-braces": "RequireBraces | - | -",
    },
    "name": {
        "java-column-limit": "LineLength | - | -",
    },
}

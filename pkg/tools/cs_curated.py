"""Hand-curated Checkstyle knowledge the jar extraction cannot supply.

Descriptions are written for this project, one or two sentences per check; a
few carry a rationale or code sentence so rule classification has negatives.
"""

DESCRIPTIONS = {
    "AbbreviationAsWordInName": ["Validates that identifiers contain no run of consecutive capital letters longer than the allowed abbreviation length."],
    "AbstractClassName": ["Checks that abstract class names match a configured pattern.", "It can also require that classes matching the pattern are declared abstract."],
    "AnnotationLocation": ["Checks that annotations on a declaration are placed on their own lines before the modifiers."],
    "AnnotationOnSameLine": ["Checks that annotations appear on the same line as the declaration they annotate."],
    "AnnotationUseStyle": ["Controls the style of annotation usage, including element style, closing parentheses and trailing array commas."],
    "AnonInnerLength": ["Checks that anonymous inner classes do not exceed a maximum number of lines.", "Long anonymous classes are hard to read and should become named classes."],
    "ArrayTrailingComma": ["Checks that multi-line array initializers end with a trailing comma."],
    "ArrayTypeStyle": ["Checks that array brackets are written after the type rather than after the variable name.", "For example `String[] args` is preferred over `String args[]`."],
    "AtclauseOrder": ["Checks that Javadoc block tags appear in the configured order."],
    "AvoidDoubleBraceInitialization": ["Detects double brace initialization of collections and other objects."],
    "AvoidEscapedUnicodeCharacters": ["Restricts the use of Unicode escape sequences such as `\\u221e` in string and character literals."],
    "AvoidInlineConditionals": ["Detects uses of the ternary conditional operator."],
    "AvoidNestedBlocks": ["Finds nested blocks that are not attached to any statement."],
    "AvoidNoArgumentSuperConstructorCall": ["Checks for explicit calls to the no-argument super constructor, which the compiler inserts anyway."],
    "AvoidStarImport": ["Checks that no import statement uses the wildcard form.", "Wildcard imports make it unclear which classes are actually used."],
    "AvoidStaticImport": ["Checks that no static import statements are used."],
    "BooleanExpressionComplexity": ["Limits the number of boolean operators in a single expression."],
    "CatchParameterName": ["Checks that catch block parameter names match a configured pattern."],
    "ClassDataAbstractionCoupling": ["Measures how many other classes a class instantiates and reports when the count exceeds a maximum."],
    "ClassFanOutComplexity": ["Counts the number of other classes a given class relies on and reports when the count exceeds a maximum."],
    "ClassMemberImpliedModifier": ["Checks that nested enums, interfaces and records explicitly declare the static modifier that is implied."],
    "ClassTypeParameterName": ["Checks that class type parameter names match a configured pattern."],
    "CommentsIndentation": ["Checks that comments are indented at the same level as the surrounding code."],
    "ConstantName": ["Checks that constant names, meaning static final fields, match a configured pattern."],
    "CovariantEquals": ["Checks that classes defining a covariant equals method also override the equals method taking an Object."],
    "CustomImportOrder": ["Checks that import statements are grouped and ordered according to configured group rules.", "Groups can be separated by blank lines."],
    "CyclomaticComplexity": ["Checks that the cyclomatic complexity of methods and constructors stays below a threshold."],
    "DeclarationOrder": ["Checks that class members appear in the conventional order of static variables, instance variables, constructors and then methods."],
    "DefaultComesLast": ["Checks that the default label of a switch statement comes after all case labels."],
    "DescendantToken": ["Checks the number of occurrences of descendant tokens below a given token in the syntax tree."],
    "DesignForExtension": ["Checks that classes are designed for extension by requiring non-private non-static methods of non-final classes to be abstract, final or empty."],
    "EmptyBlock": ["Checks for empty blocks of code."],
    "EmptyCatchBlock": ["Checks for empty catch blocks.", "A catch block containing only a comment can be allowed by configuration."],
    "EmptyForInitializerPad": ["Checks the padding of an empty for loop initializer, requiring or forbidding a space."],
    "EmptyForIteratorPad": ["Checks the padding of an empty for loop iterator, requiring or forbidding a space."],
    "EmptyLineSeparator": ["Checks that there is an empty line separator before package, imports, fields, constructors, methods and other class members.", "An empty line is also checked after the header comment."],
    "EmptyStatement": ["Detects empty statements consisting of a lone semicolon."],
    "EqualsAvoidNull": ["Checks that string literals appear on the left side of equals comparisons."],
    "EqualsHashCode": ["Checks that classes overriding equals also override hashCode."],
    "ExecutableStatementCount": ["Limits the number of executable statements in a method, constructor or initializer."],
    "ExplicitInitialization": ["Checks that fields are not explicitly initialized to the default value of their type."],
    "FallThrough": ["Checks for fall-through in switch statements, where a case group lacks a break, return, throw or continue.", "A special comment can mark an intentional fall-through."],
    "FileLength": ["Checks that source files do not exceed a maximum number of lines."],
    "FileTabCharacter": ["Checks that source files contain no tab characters."],
    "FinalClass": ["Checks that a class with only private constructors is declared final."],
    "FinalLocalVariable": ["Checks that local variables that are never reassigned are declared final."],
    "FinalParameters": ["Checks that method and constructor parameters are declared final."],
    "GenericWhitespace": ["Checks the whitespace around the angle brackets of generic type declarations."],
    "Header": ["Checks that a source file begins with a specified header text."],
    "HiddenField": ["Checks that a local variable or parameter does not shadow a field of the same class."],
    "HideUtilityClassConstructor": ["Checks that utility classes, which only have static members, do not have a public or default constructor."],
    "IllegalCatch": ["Checks that certain broad exception types are not caught, such as Exception, Throwable or RuntimeException."],
    "IllegalIdentifierName": ["Checks that identifiers do not use restricted names such as var, record, yield or permits."],
    "IllegalImport": ["Checks for imports from packages that are configured as illegal."],
    "IllegalInstantiation": ["Checks for instantiation of classes that should be obtained through a factory method instead."],
    "IllegalThrows": ["Checks that certain exception types do not appear in throws clauses."],
    "IllegalToken": ["Checks for the presence of configured illegal tokens."],
    "IllegalTokenText": ["Checks that the text of specified tokens does not match a configured pattern."],
    "IllegalType": ["Checks that particular classes or interfaces are never used as declared types.", "Declaring variables with an implementation class reduces flexibility."],
    "ImportControl": ["Controls which packages and classes each package is allowed to import, according to a rules file."],
    "ImportOrder": ["Checks the ordering and grouping of import statements."],
    "Indentation": ["Checks the indentation of Java code against configured offsets."],
    "InnerAssignment": ["Checks for assignments inside subexpressions, such as `String s = Integer.toString(i = 2);`."],
    "InnerTypeLast": ["Checks that nested types are declared at the bottom of the class, after all fields and methods."],
    "InterfaceIsType": ["Checks that interfaces are used to define types rather than as holders of constants only."],
    "InterfaceMemberImpliedModifier": ["Checks that interface members explicitly declare the modifiers that are implied."],
    "InterfaceTypeParameterName": ["Checks that interface type parameter names match a configured pattern."],
    "InvalidJavadocPosition": ["Checks that Javadoc comments are placed only before class, interface, method, field and similar declarations."],
    "JavaNCSS": ["Computes the non-commenting source statements of methods, classes and files and reports counts above the maxima."],
    "JavadocBlockTagLocation": ["Checks that a Javadoc block tag appears only at the beginning of a line."],
    "JavadocContentLocation": ["Checks where the Javadoc content starts, either on the first line or on the second line of the comment."],
    "JavadocMethod": ["Checks the Javadoc of methods and constructors, including its param, return and throws tags."],
    "JavadocMissingLeadingAsterisk": ["Checks that every line of a Javadoc comment starts with a leading asterisk."],
    "JavadocMissingWhitespaceAfterAsterisk": ["Checks that a whitespace follows the leading asterisk on each Javadoc line."],
    "JavadocPackage": ["Checks that each Java package has a package-info.java file for package documentation."],
    "JavadocParagraph": ["Checks the formatting of Javadoc paragraphs.", "There must be one blank line between paragraphs, and each paragraph after the first starts with a `<p>` tag placed immediately before the first word."],
    "JavadocStyle": ["Validates Javadoc comments for a well-formed first sentence, proper HTML and no empty text."],
    "JavadocTagContinuationIndentation": ["Checks the indentation of continuation lines in Javadoc block tags."],
    "JavadocType": ["Checks the Javadoc comments of class and interface definitions, including author, version and type parameter tags."],
    "JavadocVariable": ["Checks that variables have Javadoc comments."],
    "LambdaBodyLength": ["Checks that lambda bodies do not exceed a maximum number of lines."],
    "LambdaParameterName": ["Checks that lambda parameter names match a configured pattern."],
    "LeftCurly": ["Checks the placement of left curly braces at the start of code blocks."],
    "LineLength": ["Checks for long lines.", "Long lines are hard to read in printouts or when several windows are shown side by side."],
    "LocalFinalVariableName": ["Checks that local final variable names match a configured pattern."],
    "LocalVariableName": ["Checks that local, non-final variable names match a configured pattern."],
    "MagicNumber": ["Checks that numeric literals other than a small set of ignored numbers are defined as named constants."],
    "MatchXpath": ["Evaluates a configured XPath query against the syntax tree and reports every matching node."],
    "MemberName": ["Checks that instance variable names match a configured pattern."],
    "MethodCount": ["Checks the number of methods declared in each type, by access modifier and in total."],
    "MethodLength": ["Checks that methods and constructors do not exceed a maximum length."],
    "MethodName": ["Checks that method names match a configured pattern."],
    "MethodParamPad": ["Checks the padding between the identifier of a method definition or call and the left parenthesis of its parameter list."],
    "MethodTypeParameterName": ["Checks that method type parameter names match a configured pattern."],
    "MissingCtor": ["Checks that classes, except abstract ones, define a constructor and do not rely on the default one."],
    "MissingDeprecated": ["Checks that the Deprecated annotation and the deprecated Javadoc tag are both present when either one is present."],
    "MissingJavadocMethod": ["Checks for missing Javadoc comments on methods and constructors."],
    "MissingJavadocPackage": ["Checks for a missing Javadoc comment in package-info.java files."],
    "MissingJavadocType": ["Checks for missing Javadoc comments on class, enum, interface and annotation definitions."],
    "MissingOverride": ["Checks that the Override annotation is present when the inheritDoc Javadoc tag is used."],
    "MissingSwitchDefault": ["Checks that switch statements have a default clause."],
    "ModifiedControlVariable": ["Checks that the control variable of a for loop is not modified inside the loop body."],
    "ModifierOrder": ["Checks that modifiers appear in the order recommended by the Java Language Specification, with annotations first."],
    "MultipleStringLiterals": ["Checks for the same string literal occurring several times within a file."],
    "MultipleVariableDeclarations": ["Checks that each variable declaration is in its own statement and on its own line."],
    "MutableException": ["Ensures that exception classes are immutable, meaning all their fields are final."],
    "NPathComplexity": ["Checks that the NPath complexity, the number of possible execution paths through a method, stays below a threshold."],
    "NeedBraces": ["Checks for braces around code blocks."],
    "NestedForDepth": ["Restricts nested for loops to a maximum depth."],
    "NestedIfDepth": ["Restricts nested if-else blocks to a maximum depth."],
    "NestedTryDepth": ["Restricts nested try blocks to a maximum depth."],
    "NewlineAtEndOfFile": ["Checks that each file ends with a line separator."],
    "NoArrayTrailingComma": ["Checks that array initializers do not end with a trailing comma."],
    "NoClone": ["Checks that the clone method is not overridden."],
    "NoCodeInFile": ["Checks whether a file contains no code at all, only comments or whitespace."],
    "NoEnumTrailingComma": ["Checks that enum constant lists do not end with a trailing comma."],
    "NoFinalizer": ["Checks that the finalize method is not overridden."],
    "NoLineWrap": ["Checks that chosen statements such as import and package declarations are not line-wrapped."],
    "NoWhitespaceAfter": ["Checks that there is no whitespace after certain tokens such as unary operators, array initializers and the dot separator."],
    "NoWhitespaceBefore": ["Checks that there is no whitespace before certain tokens such as semicolons, postfix increments and commas."],
    "NoWhitespaceBeforeCaseDefaultColon": ["Checks that there is no whitespace before the colon of a switch case or default label."],
    "NonEmptyAtclauseDescription": ["Checks that Javadoc block tags are followed by a description and are not empty."],
    "OneStatementPerLine": ["Checks that there is only one statement per line."],
    "OneTopLevelClass": ["Checks that each source file contains exactly one top-level class, interface or enum."],
    "OperatorWrap": ["Checks the policy on how to wrap lines on operators."],
    "OrderedProperties": ["Checks that the keys of a properties file are sorted alphabetically."],
    "OuterTypeFilename": ["Checks that the name of the outer type matches the name of the file."],
    "OuterTypeNumber": ["Checks that the number of top-level types in a file does not exceed a maximum."],
    "OverloadMethodsDeclarationOrder": ["Checks that overloaded methods are grouped together with no other method between them."],
    "PackageAnnotation": ["Checks that package annotations appear only in the package-info.java file."],
    "PackageDeclaration": ["Ensures that a class has a package declaration.", "It can optionally verify that the declared package matches the directory of the file."],
    "PackageName": ["Checks that package names match a configured pattern."],
    "ParameterAssignment": ["Disallows assignment of method and constructor parameters."],
    "ParameterName": ["Checks that method parameter names match a configured pattern."],
    "ParameterNumber": ["Checks the number of parameters of a method or constructor."],
    "ParenPad": ["Checks the policy on padding inside parentheses, requiring or forbidding a space after the left and before the right parenthesis."],
    "PatternVariableName": ["Checks that pattern variable names match a configured pattern."],
    "RecordComponentName": ["Checks that record component names match a configured pattern."],
    "RecordComponentNumber": ["Checks that the number of record components does not exceed a maximum."],
    "RecordTypeParameterName": ["Checks that record type parameter names match a configured pattern."],
    "RedundantImport": ["Checks for redundant imports, such as duplicates, imports from java.lang or from the same package."],
    "RedundantModifier": ["Checks for modifiers that are redundant in their context, such as public on interface methods."],
    "Regexp": ["Checks that a configured pattern exists, does not exist or occurs a limited number of times in the file."],
    "RegexpHeader": ["Checks the header of a source file against a header that contains regular expressions for each line."],
    "RegexpMultiline": ["Checks that a configured pattern does not match across multiple lines in any file."],
    "RegexpOnFilename": ["Checks that file names match, or do not match, configured patterns for the file and folder."],
    "RegexpSingleline": ["Checks that a configured pattern does not match on any single line of a file."],
    "RegexpSinglelineJava": ["Checks that a configured pattern does not match on any single line of Java code, optionally ignoring comments."],
    "RequireEmptyLineBeforeBlockTagGroup": ["Checks that a blank line separates the Javadoc description from the first block tag."],
    "RequireThis": ["Checks that references to instance variables and methods of the current object use the explicit this prefix."],
    "ReturnCount": ["Restricts the number of return statements in methods, constructors and lambdas."],
    "RightCurly": ["Checks the placement of right curly braces for code blocks and control statements."],
    "SeparatorWrap": ["Checks the line wrapping policy at separators such as the dot and the comma."],
    "SimplifyBooleanExpression": ["Checks for boolean expressions that are overly complicated, such as `b == true`."],
    "SimplifyBooleanReturn": ["Checks for if statements that return boolean literals and can be replaced by a single return."],
    "SingleLineJavadoc": ["Checks that a Javadoc comment containing no block tags fits on a single line when it is short enough."],
    "SingleSpaceSeparator": ["Checks that non-whitespace characters are separated by no more than one whitespace."],
    "StaticVariableName": ["Checks that static, non-final variable names match a configured pattern."],
    "StringLiteralEquality": ["Checks that string literals are not compared using the == or != operators."],
    "SummaryJavadoc": ["Checks that the Javadoc summary sentence, the first sentence of the description, is present, ends with a period and avoids forbidden fragments."],
    "SuperClone": ["Checks that an overriding clone method invokes super.clone."],
    "SuperFinalize": ["Checks that an overriding finalize method invokes super.finalize."],
    "SuppressWarnings": ["Checks that the SuppressWarnings annotation does not suppress certain configured warnings."],
    "ThrowsCount": ["Restricts the number of exception types in a throws clause."],
    "TodoComment": ["Checks for comments that contain a configured marker such as TODO."],
    "TrailingComment": ["Checks that comments do not share a line with code."],
    "Translation": ["Checks that property files for different locales contain the same keys."],
    "TypeName": ["Checks that class, interface, enum and annotation type names match a configured pattern."],
    "TypecastParenPad": ["Checks the policy on padding inside the parentheses of a typecast."],
    "UncommentedMain": ["Detects main methods that are left in code."],
    "UniqueProperties": ["Detects duplicate keys in a properties file."],
    "UnnecessaryParentheses": ["Checks for parentheses that are unnecessary around identifiers, literals, return values and assignments."],
    "UnnecessarySemicolonAfterOuterTypeDeclaration": ["Checks for a redundant semicolon after a top-level type declaration."],
    "UnnecessarySemicolonAfterTypeMemberDeclaration": ["Checks for a redundant semicolon after a type member declaration."],
    "UnnecessarySemicolonInEnumeration": ["Checks for a redundant semicolon at the end of an enum body that declares only constants."],
    "UnnecessarySemicolonInTryWithResources": ["Checks for a redundant semicolon after the last resource in a try-with-resources statement."],
    "UnusedImports": ["Checks for import statements that are never used."],
    "UnusedLocalVariable": ["Checks for local variables that are declared but never used."],
    "UpperEll": ["Checks that long constants are written with an upper case L rather than a lower case l.", "The lower case letter is easily confused with the digit one."],
    "VariableDeclarationUsageDistance": ["Checks the distance between the declaration of a local variable and its first use."],
    "VisibilityModifier": ["Checks that class members other than static final constants are private unless configured otherwise."],
    "WhitespaceAfter": ["Checks that a token such as a comma, semicolon or typecast is followed by whitespace."],
    "WhitespaceAround": ["Checks that a token such as an operator or keyword is surrounded by whitespace."],
    "WriteTag": ["Requires a specified Javadoc tag to be present on types and outputs it for review."],
}

# properties of checks added after the 8.24 release: name -> [(prop, type, literals)]
ADDED_CHECKS = {
    "AvoidDoubleBraceInitialization": ("coding", True, []),
    "AvoidNoArgumentSuperConstructorCall": ("coding", True, []),
    "NoEnumTrailingComma": ("coding", True, []),
    "NoArrayTrailingComma": ("coding", True, []),
    "JavadocContentLocation": ("javadoc", True, [("location", "enum", ["first_line", "second_line"])]),
    "JavadocMissingLeadingAsterisk": ("javadoc", True, [("violateExecutionOnNonTightHtml", "boolean", None)]),
    "JavadocMissingWhitespaceAfterAsterisk": ("javadoc", True, [("violateExecutionOnNonTightHtml", "boolean", None)]),
    "LambdaBodyLength": ("sizes", True, [("max", "integer", None)]),
    "MatchXpath": ("coding", True, [("query", "string", None)]),
    "NoCodeInFile": ("coding", True, []),
    "NoWhitespaceBeforeCaseDefaultColon": ("whitespace", True, []),
    "PatternVariableName": ("naming", True, [("format", "regex", None)]),
    "RecordComponentName": ("naming", True, [("format", "regex", None)]),
    "RecordComponentNumber": ("sizes", True, [("accessModifiers", "set", None), ("max", "integer", None)]),
    "RecordTypeParameterName": ("naming", True, [("format", "regex", None)]),
    "RequireEmptyLineBeforeBlockTagGroup": ("javadoc", True, [("violateExecutionOnNonTightHtml", "boolean", None)]),
    "UnnecessarySemicolonAfterOuterTypeDeclaration": ("coding", True, []),
    "IllegalIdentifierName": ("naming", True, [("format", "regex", None)]),
    "UnusedLocalVariable": ("coding", True, []),
}

# string setters that really take one of a fixed set of literals
ENUM_STRINGS = {
    ("AnnotationUseStyle", "closingParens"): ["always", "never", "ignore"],
    ("AnnotationUseStyle", "elementStyle"): ["expanded", "compact", "compact_no_array", "ignore"],
    ("AnnotationUseStyle", "trailingArrayComma"): ["always", "never", "ignore"],
    ("EmptyBlock", "option"): ["text", "statement"],
    ("EmptyForInitializerPad", "option"): ["nospace", "space"],
    ("EmptyForIteratorPad", "option"): ["nospace", "space"],
    ("ImportOrder", "option"): ["top", "above", "inflow", "under", "bottom"],
    ("LeftCurly", "option"): ["eol", "nl", "nlow"],
    ("MethodParamPad", "option"): ["nospace", "space"],
    ("NewlineAtEndOfFile", "lineSeparator"): ["crlf", "cr", "lf", "lf_cr_crlf", "system"],
    ("OperatorWrap", "option"): ["nl", "eol"],
    ("ParenPad", "option"): ["nospace", "space"],
    ("RightCurly", "option"): ["same", "alone", "alone_or_singleline"],
    ("SeparatorWrap", "option"): ["eol", "nl"],
    ("TypecastParenPad", "option"): ["nospace", "space"],
}

# string setters that are patterns in practice
REGEX_STRINGS = {
    ("IllegalTokenText", "format"), ("RegexpMultiline", "format"),
    ("RegexpSingleline", "format"), ("RegexpSinglelineJava", "format"),
}

# checks whose token set is configurable; value is an example token value
TOKENS = {
    "AbbreviationAsWordInName": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF, METHOD_DEF, VARIABLE_DEF",
    "AnnotationLocation": "CLASS_DEF, INTERFACE_DEF, METHOD_DEF, CTOR_DEF, VARIABLE_DEF",
    "AnnotationOnSameLine": "CLASS_DEF, METHOD_DEF, CTOR_DEF",
    "BooleanExpressionComplexity": "LAND, BAND, LOR, BOR, BXOR",
    "CommentsIndentation": "SINGLE_LINE_COMMENT, BLOCK_COMMENT_BEGIN",
    "CyclomaticComplexity": "METHOD_DEF, CTOR_DEF, LITERAL_IF, LITERAL_WHILE",
    "DescendantToken": "LITERAL_SWITCH",
    "EmptyBlock": "LITERAL_TRY, LITERAL_FINALLY, LITERAL_IF, LITERAL_ELSE, LITERAL_SWITCH",
    "EmptyLineSeparator": "PACKAGE_DEF, IMPORT, STATIC_IMPORT, CLASS_DEF, INTERFACE_DEF, ENUM_DEF, STATIC_INIT, INSTANCE_INIT, METHOD_DEF, CTOR_DEF, VARIABLE_DEF",
    "ExecutableStatementCount": "CTOR_DEF, METHOD_DEF, INSTANCE_INIT, STATIC_INIT",
    "FinalLocalVariable": "VARIABLE_DEF, PARAMETER_DEF",
    "FinalParameters": "METHOD_DEF, CTOR_DEF",
    "HiddenField": "VARIABLE_DEF, PARAMETER_DEF, LAMBDA",
    "IllegalIdentifierName": "CLASS_DEF, METHOD_DEF, VARIABLE_DEF, PARAMETER_DEF",
    "IllegalToken": "LABELED_STAT",
    "IllegalTokenText": "STRING_LITERAL, CHAR_LITERAL",
    "IllegalType": "VARIABLE_DEF, PARAMETER_DEF, METHOD_DEF",
    "InvalidJavadocPosition": "BLOCK_COMMENT_BEGIN",
    "JavadocMethod": "METHOD_DEF, CTOR_DEF, ANNOTATION_FIELD_DEF",
    "JavadocStyle": "CLASS_DEF, INTERFACE_DEF, METHOD_DEF, CTOR_DEF, VARIABLE_DEF",
    "JavadocType": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF",
    "JavadocVariable": "VARIABLE_DEF, ENUM_CONSTANT_DEF",
    "LocalVariableName": "VARIABLE_DEF, PARAMETER_DEF",
    "LeftCurly": "CLASS_DEF, INTERFACE_DEF, METHOD_DEF, CTOR_DEF, LITERAL_IF, LITERAL_FOR, LITERAL_WHILE",
    "MagicNumber": "NUM_DOUBLE, NUM_FLOAT, NUM_INT, NUM_LONG",
    "MethodLength": "METHOD_DEF, CTOR_DEF",
    "MethodParamPad": "CTOR_DEF, LITERAL_NEW, METHOD_CALL, METHOD_DEF, SUPER_CTOR_CALL",
    "MissingJavadocMethod": "METHOD_DEF, CTOR_DEF, ANNOTATION_FIELD_DEF",
    "MissingJavadocType": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF, ANNOTATION_DEF",
    "ModifierOrder": None,
    "NeedBraces": "LITERAL_DO, LITERAL_ELSE, LITERAL_FOR, LITERAL_IF, LITERAL_WHILE",
    "NoLineWrap": "IMPORT, STATIC_IMPORT, PACKAGE_DEF",
    "NoWhitespaceAfter": "AT, INC, DEC, UNARY_MINUS, UNARY_PLUS, BNOT, LNOT, DOT, ARRAY_DECLARATOR, INDEX_OP",
    "NoWhitespaceBefore": "COMMA, SEMI, POST_INC, POST_DEC, ELLIPSIS",
    "OperatorWrap": "QUESTION, COLON, EQUAL, NOT_EQUAL, DIV, PLUS, MINUS, STAR, MOD, LAND, LOR",
    "ParameterNumber": "METHOD_DEF, CTOR_DEF",
    "ParenPad": "CTOR_CALL, METHOD_CALL, LPAREN, RPAREN, SUPER_CTOR_CALL",
    "RedundantModifier": "METHOD_DEF, VARIABLE_DEF, ANNOTATION_FIELD_DEF, INTERFACE_DEF",
    "ReturnCount": "CTOR_DEF, METHOD_DEF, LAMBDA",
    "RightCurly": "LITERAL_TRY, LITERAL_CATCH, LITERAL_FINALLY, LITERAL_IF, LITERAL_ELSE",
    "SeparatorWrap": "DOT, COMMA, ELLIPSIS, ARRAY_DECLARATOR, METHOD_REF",
    "SuppressWarnings": "CLASS_DEF, INTERFACE_DEF, METHOD_DEF, CTOR_DEF",
    "TypeName": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF, ANNOTATION_DEF",
    "TypecastParenPad": None,
    "UnnecessaryParentheses": "EXPR, IDENT, NUM_INT, STRING_LITERAL, ASSIGN, LAMBDA",
    "UnnecessarySemicolonAfterOuterTypeDeclaration": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF",
    "WhitespaceAfter": "COMMA, SEMI, TYPECAST, LITERAL_IF, LITERAL_ELSE, LITERAL_WHILE, LITERAL_DO, LITERAL_FOR, DO_WHILE",
    "WhitespaceAround": "ASSIGN, BAND, COLON, DIV, EQUAL, GE, GT, LAND, LCURLY, LE, LITERAL_IF, LOR, LT, MINUS, PLUS, QUESTION, RCURLY, STAR",
    "WriteTag": "CLASS_DEF, INTERFACE_DEF, METHOD_DEF",
}
TOKENS = {k: v for k, v in TOKENS.items() if v is not None}

# properties that are framework plumbing rather than behavior
SKIP_PROPS = {"messageDispatcher"}
